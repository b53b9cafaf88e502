#include "influmech/selection.hpp"

#include <algorithm>
#include <cmath>

#include "influmech/rng.hpp"

namespace influmech {

SigmaEstimate Evaluator::sigma(const SocialGraph& g,
                               const std::vector<double>& probs,
                               const TargetSet& seeds) const {
  if (kind == Kind::kExact) return sigma_exact(g, probs, seeds);
  return sigma_mc(g, probs, seeds, samples, seed, threads);
}

ValuationVector Evaluator::valuations(const SocialGraph& g,
                                      const std::vector<double>& probs,
                                      const TargetSet& seeds) const {
  if (kind == Kind::kExact) return valuations_exact(g, probs, seeds);
  return valuations_mc(g, probs, seeds, samples, seed, threads).values;
}

namespace {

void check_k(const SocialGraph& g, int k) {
  if (k < 1 || k > g.num_nodes()) {
    throw InputError("k must lie in [1, n], got " + std::to_string(k));
  }
}

}  // namespace

SelectionResult select_exact(const SocialGraph& g,
                             const std::vector<double>& probs, int k,
                             const Evaluator& evaluator) {
  check_k(g, k);
  if (evaluator.kind == Evaluator::Kind::kExact && g.num_nodes() > 20) {
    throw InputError("select_exact guard: n <= 20 required with exact evaluator");
  }
  SelectionResult result;
  result.algorithm = "exact";

  const int n = g.num_nodes();
  std::vector<NodeId> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  bool first = true;
  while (true) {
    TargetSet candidate{combo};
    SigmaEstimate est = evaluator.sigma(g, probs, candidate);
    ++result.evaluations;
    // Combinations are visited in lexicographic order, so strict improvement
    // keeps the lexicographically smallest argmax.
    if (first || est.mean > result.sigma.mean) {
      first = false;
      result.target = candidate;
      result.sigma = est;
    }
    int i = k - 1;
    while (i >= 0 && combo[i] == n - k + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return result;
}

SelectionResult select_greedy(const SocialGraph& g,
                              const std::vector<double>& probs, int k,
                              const Evaluator& evaluator) {
  check_k(g, k);
  SelectionResult result;
  result.algorithm = "greedy";

  std::vector<NodeId> chosen;
  for (int round = 0; round < k; ++round) {
    NodeId best_node = -1;
    SigmaEstimate best_est;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      std::vector<NodeId> trial = chosen;
      trial.push_back(v);
      SigmaEstimate est =
          evaluator.sigma(g, probs, make_target_set(std::move(trial), g.num_nodes()));
      ++result.evaluations;
      if (best_node < 0 || est.mean > best_est.mean) {
        best_node = v;  // node order is ascending, so ties keep the smallest
        best_est = est;
      }
    }
    chosen.push_back(best_node);
    result.sigma = best_est;
  }
  result.target = make_target_set(std::move(chosen), g.num_nodes());
  return result;
}

namespace {

// k nodes by descending key, smallest index first among equals.
TargetSet top_k_by(const SocialGraph& g, int k,
                   const std::vector<double>& key) {
  std::vector<NodeId> order(g.num_nodes());
  for (int v = 0; v < g.num_nodes(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return key[a] > key[b];
  });
  order.resize(k);
  return make_target_set(std::move(order), g.num_nodes());
}

}  // namespace

SelectionResult select_high_degree(const SocialGraph& g, int k) {
  check_k(g, k);
  std::vector<double> degree(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) degree[v] = g.out_degree(v);
  SelectionResult result;
  result.algorithm = "high_degree";
  result.target = top_k_by(g, k, degree);
  return result;
}

SelectionResult select_degree_discount(const SocialGraph& g,
                                       const std::vector<double>& probs, int k,
                                       bool force_mean_p) {
  check_k(g, k);
  double p = 0.0;
  if (g.num_edges() > 0) {
    bool uniform = true;
    for (double q : probs) {
      if (std::abs(q - probs[0]) > 1e-12) uniform = false;
      p += q;
    }
    p /= g.num_edges();
    if (!uniform) {
      if (!force_mean_p) {
        throw InputError(
            "degree discount requires a uniform edge probability "
            "(pass force_mean_p to use the mean)");
      }
    } else {
      p = probs[0];
    }
  }

  SelectionResult result;
  result.algorithm = "degree_discount";
  const int n = g.num_nodes();
  std::vector<int> selected_in_neighbors(n, 0);  // t_v
  std::vector<char> picked(n, 0);
  std::vector<NodeId> chosen;
  for (int round = 0; round < k; ++round) {
    NodeId best = -1;
    double best_dd = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (picked[v]) continue;
      double d = g.out_degree(v);
      double t = selected_in_neighbors[v];
      double dd = d - 2.0 * t - (d - t) * t * p;
      if (best < 0 || dd > best_dd) {
        best = v;
        best_dd = dd;
      }
    }
    picked[best] = 1;
    chosen.push_back(best);
    for (int e : g.out_edges(best)) {
      ++selected_in_neighbors[g.edge(e).dst];
    }
  }
  result.target = make_target_set(std::move(chosen), n);
  return result;
}

SelectionResult select_random(const SocialGraph& g, int k, uint64_t seed) {
  check_k(g, k);
  Rng rng(seed);
  std::vector<NodeId> pool(g.num_nodes());
  for (int v = 0; v < g.num_nodes(); ++v) pool[v] = v;
  for (int i = 0; i < k; ++i) {
    size_t j = i + rng.next_below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  SelectionResult result;
  result.algorithm = "random";
  result.target = make_target_set(std::move(pool), g.num_nodes());
  return result;
}

}  // namespace influmech

#include "influmech/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "influmech/rng.hpp"

namespace influmech {

bool TargetSet::contains(NodeId v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

TargetSet make_target_set(std::vector<NodeId> members, int n) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw InputError("target set must be nonempty");
  if (members.front() < 0 || members.back() >= n) {
    throw InputError("target set member out of range");
  }
  return TargetSet{std::move(members)};
}

int ActivationTrace::active_count() const {
  int count = 0;
  for (int t : activated_at) count += (t != kInactive);
  return count;
}

double ValuationVector::total() const {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum;
}

CascadeOutcome sample_outcome(const SocialGraph& g,
                              const std::vector<double>& probs,
                              uint64_t seed) {
  CascadeOutcome outcome;
  outcome.live.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    outcome.live[e] = uniform_at(seed, static_cast<uint64_t>(e)) < probs[e];
  }
  return outcome;
}

ActivationTrace run_cascade(const SocialGraph& g,
                            const std::vector<double>& probs,
                            const TargetSet& seeds, uint64_t seed) {
  if (seeds.members.empty()) throw InputError("empty seed set");
  ActivationTrace trace;
  trace.activated_at.assign(g.num_nodes(), ActivationTrace::kInactive);
  trace.activator.assign(g.num_nodes(), ActivationTrace::kNoActivator);

  std::vector<NodeId> frontier = seeds.members;
  for (NodeId s : frontier) trace.activated_at[s] = 0;

  int step = 0;
  std::vector<NodeId> next;
  while (!frontier.empty()) {
    ++step;
    next.clear();
    for (NodeId u : frontier) {
      for (int e : g.out_edges(u)) {
        NodeId v = g.edge(e).dst;
        if (trace.activated_at[v] != ActivationTrace::kInactive &&
            trace.activated_at[v] < step) {
          continue;  // already active before this step; no attempt made
        }
        // The coin is indexed by the edge, so this matches sample_outcome.
        bool live = uniform_at(seed, static_cast<uint64_t>(e)) < probs[e];
        if (!live) continue;
        if (trace.activated_at[v] == ActivationTrace::kInactive) {
          trace.activated_at[v] = step;
          trace.activator[v] = u;
          next.push_back(v);
        } else if (u > trace.activator[v]) {
          trace.activator[v] = u;  // same-step tie: larger index wins
        }
      }
    }
    frontier = next;
  }
  return trace;
}

int reachable_count(const SocialGraph& g, const CascadeOutcome& outcome,
                    const TargetSet& seeds) {
  std::vector<char> seen(g.num_nodes(), 0);
  std::vector<NodeId> stack = seeds.members;
  for (NodeId s : stack) seen[s] = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (int e : g.out_edges(u)) {
      if (!outcome.live[e]) continue;
      NodeId v = g.edge(e).dst;
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  int count = 0;
  for (char c : seen) count += c;
  return count;
}

std::vector<int> attribute_outcome(const SocialGraph& g,
                                   const CascadeOutcome& outcome,
                                   const TargetSet& seeds) {
  // BFS distances over live edges only.
  constexpr int kUnreached = -1;
  std::vector<int> dist(g.num_nodes(), kUnreached);
  std::vector<NodeId> frontier = seeds.members;
  for (NodeId s : frontier) dist[s] = 0;
  int level = 0;
  std::vector<NodeId> next;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (NodeId u : frontier) {
      for (int e : g.out_edges(u)) {
        if (!outcome.live[e]) continue;
        NodeId v = g.edge(e).dst;
        if (dist[v] == kUnreached) {
          dist[v] = level;
          next.push_back(v);
        }
      }
    }
    frontier = next;
  }

  // Each activated non-seed is attributed to the largest-index live
  // in-neighbor on a shortest live path.
  std::vector<int> counts(g.num_nodes(), 0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (dist[v] <= 0) continue;  // seed or never activated
    NodeId winner = -1;
    for (int e : g.in_edges(v)) {
      if (!outcome.live[e]) continue;
      NodeId u = g.edge(e).src;
      if (dist[u] != kUnreached && dist[u] + 1 == dist[v] && u > winner) {
        winner = u;
      }
    }
    ++counts[winner];
  }
  return counts;
}

namespace {

// Exact enumeration plumbing: probabilistic edges are enumerated, edges with
// p in {0,1} stay fixed.
struct ExactPlan {
  std::vector<int> random_edges;
  CascadeOutcome base;  // deterministic edges resolved, random edges off
};

ExactPlan make_exact_plan(const SocialGraph& g,
                          const std::vector<double>& probs) {
  ExactPlan plan;
  plan.base.live.assign(g.num_edges(), false);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (probs[e] >= 1.0) {
      plan.base.live[e] = true;
    } else if (probs[e] > 0.0) {
      plan.random_edges.push_back(e);
    }
  }
  if (static_cast<int>(plan.random_edges.size()) > kExactEdgeGuard) {
    throw InputError("exact enumeration guard exceeded: " +
                     std::to_string(plan.random_edges.size()) +
                     " probabilistic edges (max " +
                     std::to_string(kExactEdgeGuard) + ")");
  }
  return plan;
}

double outcome_weight(const std::vector<double>& probs,
                      const std::vector<int>& random_edges, uint64_t mask) {
  double w = 1.0;
  for (size_t b = 0; b < random_edges.size(); ++b) {
    double p = probs[random_edges[b]];
    w *= (mask >> b & 1) ? p : 1.0 - p;
  }
  return w;
}

}  // namespace

SigmaEstimate sigma_exact(const SocialGraph& g,
                          const std::vector<double>& probs,
                          const TargetSet& seeds) {
  ExactPlan plan = make_exact_plan(g, probs);
  CascadeOutcome outcome = plan.base;
  const uint64_t total = 1ULL << plan.random_edges.size();
  double mean = 0.0;
  for (uint64_t mask = 0; mask < total; ++mask) {
    for (size_t b = 0; b < plan.random_edges.size(); ++b) {
      outcome.live[plan.random_edges[b]] = (mask >> b & 1) != 0;
    }
    mean += outcome_weight(probs, plan.random_edges, mask) *
            reachable_count(g, outcome, seeds);
  }
  SigmaEstimate est;
  est.mean = mean;
  est.std_error = 0.0;
  est.samples = static_cast<int64_t>(total);
  est.exact = true;
  return est;
}

ValuationVector valuations_exact(const SocialGraph& g,
                                 const std::vector<double>& probs,
                                 const TargetSet& seeds) {
  ExactPlan plan = make_exact_plan(g, probs);
  CascadeOutcome outcome = plan.base;
  const uint64_t total = 1ULL << plan.random_edges.size();
  ValuationVector result;
  result.v.assign(g.num_nodes(), 0.0);
  result.target = seeds;
  for (uint64_t mask = 0; mask < total; ++mask) {
    for (size_t b = 0; b < plan.random_edges.size(); ++b) {
      outcome.live[plan.random_edges[b]] = (mask >> b & 1) != 0;
    }
    double w = outcome_weight(probs, plan.random_edges, mask);
    std::vector<int> counts = attribute_outcome(g, outcome, seeds);
    for (int i = 0; i < g.num_nodes(); ++i) {
      result.v[i] += w * counts[i];
    }
  }
  return result;
}

namespace {

// Runs fn(sample_index) over [0, samples) on `threads` workers in contiguous
// chunks. fn must only write sample-indexed slots.
template <typename Fn>
void for_each_sample(int64_t samples, int threads, Fn&& fn) {
  threads = std::max(1, threads);
  if (threads == 1 || samples < 2 * threads) {
    for (int64_t s = 0; s < samples; ++s) fn(s);
    return;
  }
  std::vector<std::thread> workers;
  int64_t chunk = (samples + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    int64_t begin = w * chunk;
    int64_t end = std::min(samples, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&fn, begin, end] {
      for (int64_t s = begin; s < end; ++s) fn(s);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace

SigmaEstimate sigma_mc(const SocialGraph& g, const std::vector<double>& probs,
                       const TargetSet& seeds, int64_t samples,
                       uint64_t base_seed, int threads) {
  if (samples < 1) throw InputError("sample count must be >= 1");
  std::vector<int32_t> counts(samples);
  for_each_sample(samples, threads, [&](int64_t s) {
    CascadeOutcome outcome =
        sample_outcome(g, probs, derive_seed(base_seed, s));
    counts[s] = reachable_count(g, outcome, seeds);
  });
  // Integer accumulation: the result is exact and order-independent.
  int64_t sum = 0, sum_sq = 0;
  for (int32_t c : counts) {
    sum += c;
    sum_sq += static_cast<int64_t>(c) * c;
  }
  SigmaEstimate est;
  est.samples = samples;
  est.exact = false;
  est.mean = static_cast<double>(sum) / static_cast<double>(samples);
  if (samples > 1) {
    double var = (static_cast<double>(sum_sq) -
                  static_cast<double>(sum) * est.mean) /
                 static_cast<double>(samples - 1);
    est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  }
  return est;
}

ValuationEstimate valuations_mc(const SocialGraph& g,
                                const std::vector<double>& probs,
                                const TargetSet& seeds, int64_t samples,
                                uint64_t base_seed, int threads) {
  if (samples < 1) throw InputError("sample count must be >= 1");
  const int n = g.num_nodes();
  std::vector<int32_t> counts(static_cast<size_t>(samples) * n);
  for_each_sample(samples, threads, [&](int64_t s) {
    CascadeOutcome outcome =
        sample_outcome(g, probs, derive_seed(base_seed, s));
    std::vector<int> c = attribute_outcome(g, outcome, seeds);
    for (int i = 0; i < n; ++i) counts[static_cast<size_t>(s) * n + i] = c[i];
  });
  ValuationEstimate est;
  est.samples = samples;
  est.values.target = seeds;
  est.values.v.assign(n, 0.0);
  est.std_error.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    int64_t sum = 0, sum_sq = 0;
    for (int64_t s = 0; s < samples; ++s) {
      int32_t c = counts[static_cast<size_t>(s) * n + i];
      sum += c;
      sum_sq += static_cast<int64_t>(c) * c;
    }
    double mean = static_cast<double>(sum) / static_cast<double>(samples);
    est.values.v[i] = mean;
    if (samples > 1) {
      double var =
          (static_cast<double>(sum_sq) - static_cast<double>(sum) * mean) /
          static_cast<double>(samples - 1);
      est.std_error[i] =
          std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
    }
  }
  return est;
}

}  // namespace influmech

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "influmech/cascade.hpp"
#include "influmech/graph.hpp"
#include "influmech/rng.hpp"

namespace test_util {

// Random directed graph with at most max_edges distinct edges and grid
// probabilities. interior_only restricts probabilities to (0, 1).
inline influmech::SocialGraph random_graph(influmech::Rng& rng, int n,
                                           int max_edges, double eps = 0.1,
                                           bool interior_only = false,
                                           int max_incident_degree = 0) {
  std::vector<influmech::Edge> all;
  for (int s = 0; s < n; ++s) {
    for (int d = 0; d < n; ++d) {
      if (s != d) all.push_back({s, d});
    }
  }
  for (size_t i = 0; i + 1 < all.size(); ++i) {
    size_t j = i + rng.next_below(all.size() - i);
    std::swap(all[i], all[j]);
  }
  std::vector<influmech::Edge> edges;
  std::vector<int> incident(n, 0);
  for (const auto& e : all) {
    if (static_cast<int>(edges.size()) == max_edges) break;
    if (max_incident_degree > 0 && (incident[e.src] >= max_incident_degree ||
                                    incident[e.dst] >= max_incident_degree)) {
      continue;
    }
    edges.push_back(e);
    ++incident[e.src];
    ++incident[e.dst];
  }
  long long units = std::llround(1.0 / eps);
  std::vector<double> probs;
  for (size_t i = 0; i < edges.size(); ++i) {
    long long u = interior_only ? 1 + rng.next_below(units - 1)
                                : rng.next_below(units + 1);
    probs.push_back(static_cast<double>(u) * eps);
  }
  return influmech::SocialGraph(n, eps, std::move(edges), std::move(probs));
}

inline influmech::TargetSet random_target(influmech::Rng& rng, int n, int k) {
  std::vector<influmech::NodeId> pool(n);
  for (int v = 0; v < n; ++v) pool[v] = v;
  for (int i = 0; i < k; ++i) {
    size_t j = i + rng.next_below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return influmech::make_target_set(std::move(pool), n);
}

}  // namespace test_util

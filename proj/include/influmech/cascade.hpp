#pragma once

#include <cstdint>
#include <vector>

#include "influmech/graph.hpp"

namespace influmech {

// Seed nodes activated at time 0. Members kept sorted and distinct.
struct TargetSet {
  std::vector<NodeId> members;

  int k() const { return static_cast<int>(members.size()); }
  bool contains(NodeId v) const;
};

TargetSet make_target_set(std::vector<NodeId> members, int n);

// One realization of all edge coin flips (live-edge view).
struct CascadeOutcome {
  std::vector<bool> live;  // indexed by graph edge index
};

// Step-wise cascade record. Seeds have time 0 and no activator.
struct ActivationTrace {
  static constexpr int kInactive = -1;
  static constexpr NodeId kNoActivator = -1;

  std::vector<int> activated_at;  // kInactive if never activated
  std::vector<NodeId> activator;  // kNoActivator for seeds / inactive

  int active_count() const;
};

struct SigmaEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int64_t samples = 0;
  bool exact = false;
};

// Per-agent expected number of neighbors activated, under shortest-live-path
// attribution with larger-index tie break.
struct ValuationVector {
  std::vector<double> v;
  TargetSet target;

  double total() const;
};

struct ValuationEstimate {
  ValuationVector values;
  std::vector<double> std_error;
  int64_t samples = 0;
};

// Flips every edge coin up front. Coin for edge e is a pure function of
// (seed, e), shared with run_cascade.
CascadeOutcome sample_outcome(const SocialGraph& g,
                              const std::vector<double>& probs, uint64_t seed);

// Discrete-time independent cascade. Each node gets one activation attempt
// per out-neighbor, in the step after its own activation. When several
// in-neighbors succeed on the same step, the largest index becomes the
// recorded activator.
ActivationTrace run_cascade(const SocialGraph& g,
                            const std::vector<double>& probs,
                            const TargetSet& seeds, uint64_t seed);

// Nodes reachable from the seeds over live edges, seeds included.
int reachable_count(const SocialGraph& g, const CascadeOutcome& outcome,
                    const TargetSet& seeds);

// Maximum number of probabilistic (0 < p < 1) edges for exact enumeration.
constexpr int kExactEdgeGuard = 25;

// sigma(A) by enumerating all outcomes of the probabilistic edges;
// deterministic edges (p in {0,1}) are fixed, not enumerated.
SigmaEstimate sigma_exact(const SocialGraph& g,
                          const std::vector<double>& probs,
                          const TargetSet& seeds);

// Monte Carlo sigma(A). Sample s draws its coins from derive_seed(base, s),
// and per-sample actives are integers, so the result is independent of the
// thread count.
SigmaEstimate sigma_mc(const SocialGraph& g, const std::vector<double>& probs,
                       const TargetSet& seeds, int64_t samples,
                       uint64_t base_seed, int threads = 1);

// Exact per-agent valuations (probability-weighted attribution counts).
ValuationVector valuations_exact(const SocialGraph& g,
                                 const std::vector<double>& probs,
                                 const TargetSet& seeds);

ValuationEstimate valuations_mc(const SocialGraph& g,
                                const std::vector<double>& probs,
                                const TargetSet& seeds, int64_t samples,
                                uint64_t base_seed, int threads = 1);

// Attribution counts for one fixed outcome: result[i] = number of nodes
// whose activation is attributed to i. Exposed for oracle-style tests.
std::vector<int> attribute_outcome(const SocialGraph& g,
                                   const CascadeOutcome& outcome,
                                   const TargetSet& seeds);

}  // namespace influmech

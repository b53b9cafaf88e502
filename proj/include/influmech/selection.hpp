#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "influmech/cascade.hpp"
#include "influmech/graph.hpp"

namespace influmech {

// How sigma(A) is estimated during selection and payment computation.
struct Evaluator {
  enum class Kind { kExact, kMonteCarlo };
  Kind kind = Kind::kExact;
  int64_t samples = 10000;
  uint64_t seed = 1;
  int threads = 1;

  static Evaluator exact() { return Evaluator{}; }
  static Evaluator mc(int64_t samples, uint64_t seed, int threads = 1) {
    return Evaluator{Kind::kMonteCarlo, samples, seed, threads};
  }

  SigmaEstimate sigma(const SocialGraph& g, const std::vector<double>& probs,
                      const TargetSet& seeds) const;
  ValuationVector valuations(const SocialGraph& g,
                             const std::vector<double>& probs,
                             const TargetSet& seeds) const;
};

struct SelectionResult {
  TargetSet target;
  SigmaEstimate sigma;
  std::string algorithm;
  int64_t evaluations = 0;  // number of sigma evaluations performed
};

// Argmax of sigma over all size-k subsets; ties go to the lexicographically
// smallest member sequence. Guard: n <= 20 with the exact evaluator.
SelectionResult select_exact(const SocialGraph& g,
                             const std::vector<double>& probs, int k,
                             const Evaluator& evaluator);

// Greedy marginal-gain selection (the constant-factor approximation for the
// independent cascade model).
SelectionResult select_greedy(const SocialGraph& g,
                              const std::vector<double>& probs, int k,
                              const Evaluator& evaluator);

// k nodes of largest out-degree.
SelectionResult select_high_degree(const SocialGraph& g, int k);

// Degree discount heuristic: dd_v = d_v - 2 t_v - (d_v - t_v) t_v p with
// uniform edge probability p. With force_mean_p the mean edge probability is
// used when probabilities are not uniform.
SelectionResult select_degree_discount(const SocialGraph& g,
                                       const std::vector<double>& probs, int k,
                                       bool force_mean_p = false);

// Uniform random k-subset, deterministic given seed. Never reads probs.
SelectionResult select_random(const SocialGraph& g, int k, uint64_t seed);

}  // namespace influmech

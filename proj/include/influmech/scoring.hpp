#pragma once

#include <optional>
#include <string>
#include <vector>

#include "influmech/graph.hpp"

namespace influmech {

// Probability distribution over outcomes {1, ..., t}, t >= 2.
struct Distribution {
  std::vector<double> z;

  int t() const { return static_cast<int>(z.size()); }
};

// Throws InputError unless components are nonnegative and sum to 1 (1e-9).
void validate_distribution(const Distribution& d);

// Distribution (theta, 1 - theta): outcome 1 = active, outcome 2 = inactive.
Distribution binary_distribution(double theta);

enum class RuleId {
  kQuadratic,
  kLogarithmic,
  kSpherical,
  kWeighted,
  kReverseWeighted,
  // Reverse weighted with the extra 1/t factor that appears in the proper-
  // ness proof's algebra; differs from kReverseWeighted by a constant factor.
  kReverseWeightedScaled,
  // S_i(z) = z_i. Not proper; kept as a negative control for the audits.
  kImproperLinear,
};

std::string rule_name(RuleId rule);
std::optional<RuleId> rule_from_name(const std::string& name);

// All rules eligible as payment rules (bounded proper rules).
std::vector<RuleId> payment_rules();

// Score S_i(z) for 1-based outcome index i.
//
//   quadratic         2 z_i - sum_j z_j^2
//   logarithmic       ln z_i                      (z_i > 0 required)
//   spherical         z_i / sqrt(sum_j z_j^2)
//   weighted          (2 i z_i - sum_j z_j^2 j) / t
//   reverse weighted  2 z_i (t - i) - sum_j z_j^2 (t - j)
double score(RuleId rule, int outcome, const Distribution& z);

// V(z|w) = sum_i w_i S_i(z). Terms with w_i = 0 are skipped, so the
// logarithmic rule only needs z_i > 0 where w_i > 0.
double expected_score(RuleId rule, const Distribution& z,
                      const Distribution& w);

// L(z|w) = V(w|w) - V(z|w).
double loss(RuleId rule, const Distribution& z, const Distribution& w);

// All distributions on the eps grid with t components summing to 1.
std::vector<Distribution> enumerate_grid_distributions(int t, double epsilon);

struct GridLossResult {
  double min_loss = 0.0;
  Distribution argmin_z;
  Distribution argmin_w;
  long long pairs_checked = 0;
};

// Exhaustive minimum of loss(z|w) over grid pairs z != w.
// Guard: t <= 3, epsilon >= 0.05; logarithmic rejected.
GridLossResult grid_min_loss(RuleId rule, int t, double epsilon);

struct PropernessResult {
  bool proper = true;
  // Populated with a violating pair when proper == false.
  Distribution witness_z;
  Distribution witness_w;
  double witness_loss = 0.0;
};

// True iff every grid pair z != w has strictly positive loss.
PropernessResult is_proper_on_grid(RuleId rule, int t, double epsilon);

}  // namespace influmech

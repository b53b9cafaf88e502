#include "influmech/scoring.hpp"

#include <cmath>
#include <numeric>

namespace influmech {

void validate_distribution(const Distribution& d) {
  if (d.t() < 2) throw InputError("distribution needs at least 2 outcomes");
  double sum = 0.0;
  for (double zi : d.z) {
    if (zi < 0.0) throw InputError("distribution has a negative component");
    sum += zi;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InputError("distribution components sum to " + std::to_string(sum) +
                     ", expected 1");
  }
}

Distribution binary_distribution(double theta) {
  return Distribution{{theta, 1.0 - theta}};
}

std::string rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::kQuadratic: return "quadratic";
    case RuleId::kLogarithmic: return "logarithmic";
    case RuleId::kSpherical: return "spherical";
    case RuleId::kWeighted: return "weighted";
    case RuleId::kReverseWeighted: return "reverse_weighted";
    case RuleId::kReverseWeightedScaled: return "reverse_weighted_scaled";
    case RuleId::kImproperLinear: return "improper_linear";
  }
  return "unknown";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  for (RuleId rule :
       {RuleId::kQuadratic, RuleId::kLogarithmic, RuleId::kSpherical,
        RuleId::kWeighted, RuleId::kReverseWeighted,
        RuleId::kReverseWeightedScaled, RuleId::kImproperLinear}) {
    if (rule_name(rule) == name) return rule;
  }
  return std::nullopt;
}

std::vector<RuleId> payment_rules() {
  return {RuleId::kQuadratic, RuleId::kSpherical, RuleId::kWeighted,
          RuleId::kReverseWeighted};
}

double score(RuleId rule, int outcome, const Distribution& z) {
  const int t = z.t();
  if (outcome < 1 || outcome > t) {
    throw InputError("outcome index " + std::to_string(outcome) +
                     " out of range [1," + std::to_string(t) + "]");
  }
  const double zi = z.z[outcome - 1];
  double sq = 0.0;
  for (double v : z.z) sq += v * v;

  switch (rule) {
    case RuleId::kQuadratic:
      return 2.0 * zi - sq;
    case RuleId::kLogarithmic:
      if (zi <= 0.0) {
        throw InputError("logarithmic score undefined at z_i = 0");
      }
      return std::log(zi);
    case RuleId::kSpherical:
      return zi / std::sqrt(sq);
    case RuleId::kWeighted: {
      double weighted_sq = 0.0;
      for (int j = 1; j <= t; ++j) weighted_sq += z.z[j - 1] * z.z[j - 1] * j;
      return (2.0 * outcome * zi - weighted_sq) / t;
    }
    case RuleId::kReverseWeighted:
    case RuleId::kReverseWeightedScaled: {
      double weighted_sq = 0.0;
      for (int j = 1; j <= t; ++j) {
        weighted_sq += z.z[j - 1] * z.z[j - 1] * (t - j);
      }
      double s = 2.0 * zi * (t - outcome) - weighted_sq;
      return rule == RuleId::kReverseWeightedScaled ? s / t : s;
    }
    case RuleId::kImproperLinear:
      return zi;
  }
  throw std::logic_error("unhandled rule");
}

double expected_score(RuleId rule, const Distribution& z,
                      const Distribution& w) {
  if (z.t() != w.t()) throw InputError("z and w have different outcome counts");
  double v = 0.0;
  for (int i = 1; i <= w.t(); ++i) {
    if (w.z[i - 1] == 0.0) continue;  // 0 * S_i defined as 0, also for ln 0
    v += w.z[i - 1] * score(rule, i, z);
  }
  return v;
}

double loss(RuleId rule, const Distribution& z, const Distribution& w) {
  return expected_score(rule, w, w) - expected_score(rule, z, w);
}

std::vector<Distribution> enumerate_grid_distributions(int t, double epsilon) {
  long long units = std::llround(1.0 / epsilon);
  if (std::abs(1.0 / epsilon - static_cast<double>(units)) > 1e-9) {
    throw InputError("1/epsilon must be an integer");
  }
  std::vector<Distribution> out;
  std::vector<long long> parts(t, 0);
  // Enumerate compositions of `units` into t nonnegative parts.
  auto rec = [&](auto&& self, int idx, long long remaining) -> void {
    if (idx == t - 1) {
      parts[idx] = remaining;
      Distribution d;
      d.z.resize(t);
      for (int i = 0; i < t; ++i) {
        d.z[i] = static_cast<double>(parts[i]) * epsilon;
      }
      out.push_back(std::move(d));
      return;
    }
    for (long long u = 0; u <= remaining; ++u) {
      parts[idx] = u;
      self(self, idx + 1, remaining - u);
    }
  };
  rec(rec, 0, units);
  return out;
}

namespace {

void check_grid_guard(RuleId rule, int t, double epsilon) {
  if (rule == RuleId::kLogarithmic) {
    throw InputError(
        "logarithmic rule excluded from grid enumeration (unbounded at 0)");
  }
  if (t > 3 || epsilon < 0.05 - 1e-12) {
    throw InputError("grid enumeration guard exceeded (need t <= 3, eps >= 0.05)");
  }
}

}  // namespace

GridLossResult grid_min_loss(RuleId rule, int t, double epsilon) {
  check_grid_guard(rule, t, epsilon);
  auto dists = enumerate_grid_distributions(t, epsilon);
  GridLossResult result;
  bool first = true;
  for (const auto& w : dists) {
    for (const auto& z : dists) {
      if (z.z == w.z) continue;
      double l = loss(rule, z, w);
      ++result.pairs_checked;
      if (first || l < result.min_loss) {
        first = false;
        result.min_loss = l;
        result.argmin_z = z;
        result.argmin_w = w;
      }
    }
  }
  if (first) throw InputError("grid too small: no pairs z != w");
  return result;
}

PropernessResult is_proper_on_grid(RuleId rule, int t, double epsilon) {
  check_grid_guard(rule, t, epsilon);
  auto dists = enumerate_grid_distributions(t, epsilon);
  PropernessResult result;
  for (const auto& w : dists) {
    for (const auto& z : dists) {
      if (z.z == w.z) continue;
      double l = loss(rule, z, w);
      if (l <= 1e-12) {
        result.proper = false;
        result.witness_z = z;
        result.witness_w = w;
        result.witness_loss = l;
        return result;
      }
    }
  }
  return result;
}

}  // namespace influmech

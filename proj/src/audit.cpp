#include "influmech/audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "influmech/rng.hpp"
#include "influmech/scoring.hpp"

namespace influmech {

TruthProfile truth_from_graph(const SocialGraph& g) {
  return TruthProfile{g.probs()};
}

// --- OutcomeTable ---------------------------------------------------------

namespace {

// One BFS over live edges: distances, reachable count, attribution counts.
void evaluate_outcome(const SocialGraph& g, const std::vector<bool>& live,
                      const TargetSet& seeds, std::vector<int>& dist,
                      int& reach, std::vector<uint8_t>& counts) {
  constexpr int kUnreached = -1;
  dist.assign(g.num_nodes(), kUnreached);
  std::vector<NodeId> frontier = seeds.members;
  for (NodeId s : frontier) dist[s] = 0;
  reach = static_cast<int>(frontier.size());
  int level = 0;
  std::vector<NodeId> next;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (NodeId u : frontier) {
      for (int e : g.out_edges(u)) {
        if (!live[e]) continue;
        NodeId v = g.edge(e).dst;
        if (dist[v] == kUnreached) {
          dist[v] = level;
          ++reach;
          next.push_back(v);
        }
      }
    }
    frontier = next;
  }
  counts.assign(g.num_nodes(), 0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (dist[v] <= 0) continue;
    NodeId winner = -1;
    for (int e : g.in_edges(v)) {
      if (!live[e]) continue;
      NodeId u = g.edge(e).src;
      if (dist[u] >= 0 && dist[u] + 1 == dist[v] && u > winner) winner = u;
    }
    ++counts[winner];
  }
}

// Per-outcome probability weights for all 2^m edge masks.
std::vector<double> outcome_weights(const std::vector<double>& probs) {
  const int m = static_cast<int>(probs.size());
  std::vector<double> w(1ULL << m, 0.0);
  w[0] = 1.0;
  uint64_t filled = 1;
  for (int e = 0; e < m; ++e) {
    for (uint64_t mask = 0; mask < filled; ++mask) {
      double base = w[mask];
      w[mask | (1ULL << e)] = base * probs[e];
      w[mask] = base * (1.0 - probs[e]);
    }
    filled <<= 1;
  }
  return w;
}

}  // namespace

OutcomeTable::OutcomeTable(const SocialGraph& g, int k) : g_(g), k_(k) {
  const int n = g.num_nodes();
  const int m = g.num_edges();
  if (m > 20) {
    throw InputError("outcome table guard: at most 20 edges, got " +
                     std::to_string(m));
  }
  if (k < 1 || k > n) throw InputError("outcome table: k out of range");

  for (int size = 1; size <= k; ++size) {
    if (size == k) full_size_begin_ = static_cast<int>(sets_.size());
    std::vector<NodeId> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      sets_.push_back(TargetSet{combo});
      int i = size - 1;
      while (i >= 0 && combo[i] == n - size + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }

  outcomes_ = 1ULL << m;
  if (sets_.size() * outcomes_ * (n + 1) > (1ULL << 28)) {
    throw InputError("outcome table guard: instance too large to enumerate");
  }
  sigma_x_.resize(sets_.size() * outcomes_);
  val_x_.resize(sets_.size() * outcomes_ * n);

  std::vector<bool> live(m);
  std::vector<int> dist;
  std::vector<uint8_t> counts;
  for (uint64_t mask = 0; mask < outcomes_; ++mask) {
    for (int e = 0; e < m; ++e) live[e] = (mask >> e & 1) != 0;
    for (size_t si = 0; si < sets_.size(); ++si) {
      int reach = 0;
      evaluate_outcome(g_, live, sets_[si], dist, reach, counts);
      sigma_x_[si * outcomes_ + mask] = static_cast<uint8_t>(reach);
      std::copy(counts.begin(), counts.end(),
                val_x_.begin() + (si * outcomes_ + mask) * n);
    }
  }
}

std::vector<double> OutcomeTable::sigmas(const std::vector<double>& probs) const {
  std::vector<double> w = outcome_weights(probs);
  std::vector<double> out(sets_.size(), 0.0);
  for (size_t si = 0; si < sets_.size(); ++si) {
    const uint8_t* row = sigma_x_.data() + si * outcomes_;
    double acc = 0.0;
    for (uint64_t mask = 0; mask < outcomes_; ++mask) {
      acc += w[mask] * row[mask];
    }
    out[si] = acc;
  }
  return out;
}

std::vector<double> OutcomeTable::valuations(const std::vector<double>& probs,
                                             NodeId agent) const {
  const int n = g_.num_nodes();
  std::vector<double> w = outcome_weights(probs);
  std::vector<double> out(sets_.size(), 0.0);
  for (size_t si = 0; si < sets_.size(); ++si) {
    const uint8_t* row = val_x_.data() + si * outcomes_ * n;
    double acc = 0.0;
    for (uint64_t mask = 0; mask < outcomes_; ++mask) {
      acc += w[mask] * row[mask * n + agent];
    }
    out[si] = acc;
  }
  return out;
}

int OutcomeTable::select_exact_index(const std::vector<double>& sigmas) const {
  int best = full_size_begin_;
  for (int si = full_size_begin_ + 1; si < num_sets(); ++si) {
    if (sigmas[si] > sigmas[best]) best = si;
  }
  return best;
}

int OutcomeTable::select_greedy_index(const std::vector<double>& probs) const {
  std::vector<double> s = sigmas(probs);
  // Greedy: extend the chosen set one node per round; candidate sets are in
  // lexicographic order, which keeps ties on the smallest added node.
  std::vector<NodeId> chosen;
  int chosen_idx = -1;
  for (int round = 1; round <= k_; ++round) {
    int best = -1;
    for (int si = 0; si < num_sets(); ++si) {
      const TargetSet& cand = sets_[si];
      if (cand.k() != round) continue;
      bool extends = std::includes(cand.members.begin(), cand.members.end(),
                                   chosen.begin(), chosen.end());
      if (!extends) continue;
      if (best < 0 || s[si] > s[best]) best = si;
    }
    chosen = sets_[best].members;
    chosen_idx = best;
  }
  return chosen_idx;
}

OutcomeTable::Conditioned OutcomeTable::condition(
    const std::vector<double>& base_probs, const std::vector<int>& varying,
    NodeId agent) const {
  const int n = g_.num_nodes();
  const int mv = static_cast<int>(varying.size());
  Conditioned c;
  c.varying = varying;
  c.num_sets = num_sets();

  // Weight of the fixed edges only; varying edges contribute factor 1.
  std::vector<double> fixed_probs = base_probs;
  std::vector<char> is_varying(g_.num_edges(), 0);
  for (int e : varying) is_varying[e] = 1;
  std::vector<double> fw(outcomes_, 0.0);
  fw[0] = 1.0;
  uint64_t filled = 1;
  for (int e = 0; e < g_.num_edges(); ++e) {
    double p_on = is_varying[e] ? 1.0 : fixed_probs[e];
    double p_off = is_varying[e] ? 1.0 : 1.0 - fixed_probs[e];
    for (uint64_t mask = 0; mask < filled; ++mask) {
      double base = fw[mask];
      fw[mask | (1ULL << e)] = base * p_on;
      fw[mask] = base * p_off;
    }
    filled <<= 1;
  }

  const uint64_t vsize = 1ULL << mv;
  c.sigma_coeff.assign(static_cast<size_t>(c.num_sets) * vsize, 0.0);
  if (agent >= 0) {
    c.val_coeff.assign(static_cast<size_t>(c.num_sets) * vsize, 0.0);
  }
  for (uint64_t mask = 0; mask < outcomes_; ++mask) {
    uint64_t vmask = 0;
    for (int j = 0; j < mv; ++j) {
      vmask |= ((mask >> varying[j]) & 1ULL) << j;
    }
    double w = fw[mask];
    if (w == 0.0) continue;
    for (int si = 0; si < c.num_sets; ++si) {
      c.sigma_coeff[si * vsize + vmask] +=
          w * sigma_x_[si * outcomes_ + mask];
      if (agent >= 0) {
        c.val_coeff[si * vsize + vmask] +=
            w * val_x_[(si * outcomes_ + mask) * n + agent];
      }
    }
  }
  return c;
}

namespace {

void eval_conditioned(const std::vector<double>& coeff,
                      const std::vector<int>& varying, int num_sets,
                      const double* varying_probs, std::vector<double>& out) {
  const int mv = static_cast<int>(varying.size());
  const uint64_t vsize = 1ULL << mv;
  std::vector<double> weights(vsize, 0.0);
  weights[0] = 1.0;
  uint64_t filled = 1;
  for (int j = 0; j < mv; ++j) {
    double p = varying_probs[j];
    for (uint64_t mask = 0; mask < filled; ++mask) {
      double base = weights[mask];
      weights[mask | (1ULL << j)] = base * p;
      weights[mask] = base * (1.0 - p);
    }
    filled <<= 1;
  }
  out.assign(num_sets, 0.0);
  for (int si = 0; si < num_sets; ++si) {
    const double* row = coeff.data() + static_cast<size_t>(si) * vsize;
    double acc = 0.0;
    for (uint64_t vmask = 0; vmask < vsize; ++vmask) {
      acc += weights[vmask] * row[vmask];
    }
    out[si] = acc;
  }
}

}  // namespace

void OutcomeTable::Conditioned::eval_sigmas(const double* varying_probs,
                                            std::vector<double>& out) const {
  eval_conditioned(sigma_coeff, varying, num_sets, varying_probs, out);
}

void OutcomeTable::Conditioned::eval_valuations(const double* varying_probs,
                                                std::vector<double>& out) const {
  eval_conditioned(val_coeff, varying, num_sets, varying_probs, out);
}

// --- Deviation enumeration -------------------------------------------------

namespace {

struct GridInfo {
  double epsilon = 0.1;
  int levels = 11;  // 1/eps + 1
  std::vector<double> values;
};

GridInfo make_grid(double epsilon) {
  GridInfo grid;
  grid.epsilon = epsilon;
  grid.levels = static_cast<int>(std::llround(1.0 / epsilon)) + 1;
  grid.values.resize(grid.levels);
  for (int u = 0; u < grid.levels; ++u) {
    grid.values[u] = std::min(1.0, u * epsilon);
  }
  return grid;
}

int grid_digit(double p, const GridInfo& grid) {
  return static_cast<int>(std::llround(p / grid.epsilon));
}

// Calls fn(digits) for every grid combination except `truth_digits`, or for
// `samples` uniform draws when the grid exceeds `limit`. Returns {checked,
// exhaustive}.
template <typename Fn>
std::pair<int64_t, bool> scan_deviations(int coords, const GridInfo& grid,
                                         const std::vector<int>& truth_digits,
                                         int64_t limit, int64_t samples,
                                         uint64_t seed, Fn&& fn) {
  double combos = std::pow(static_cast<double>(grid.levels), coords);
  if (combos <= static_cast<double>(limit)) {
    std::vector<int> digits(coords, 0);
    int64_t checked = 0;
    while (true) {
      if (digits != truth_digits) {
        fn(digits);
        ++checked;
      }
      int j = 0;
      while (j < coords && digits[j] == grid.levels - 1) {
        digits[j] = 0;
        ++j;
      }
      if (j == coords) break;
      ++digits[j];
    }
    return {checked, true};
  }
  Rng rng(seed);
  std::vector<int> digits(coords, 0);
  int64_t checked = 0;
  while (checked < samples) {
    for (int j = 0; j < coords; ++j) {
      digits[j] = static_cast<int>(rng.next_below(grid.levels));
    }
    if (digits == truth_digits) continue;
    fn(digits);
    ++checked;
  }
  return {checked, false};
}

// Selection over precomputed candidate sigmas, honoring the configured
// selector. Returns the candidate-set index.
int select_index(const OutcomeTable& table, const std::vector<double>& sigmas,
                 const SocialGraph& g, const std::vector<double>& full_probs,
                 const MechanismConfig& config) {
  if (config.selector == "exact") return table.select_exact_index(sigmas);
  if (config.selector == "greedy") {
    // Greedy reads the same sigma vector; bands of size < k are included.
    const int k = table.set(table.first_full_size_set()).k();
    std::vector<NodeId> chosen;
    int chosen_idx = -1;
    for (int round = 1; round <= k; ++round) {
      int best = -1;
      for (int si = 0; si < table.num_sets(); ++si) {
        const TargetSet& cand = table.set(si);
        if (cand.k() != round) continue;
        if (!std::includes(cand.members.begin(), cand.members.end(),
                           chosen.begin(), chosen.end())) {
          continue;
        }
        if (best < 0 || sigmas[si] > sigmas[best]) best = si;
      }
      chosen = table.set(best).members;
      chosen_idx = best;
    }
    return chosen_idx;
  }
  if (config.selector == "high_degree" || config.selector == "degree_discount") {
    SelectionResult r =
        config.selector == "high_degree"
            ? select_high_degree(g, table.set(table.first_full_size_set()).k())
            : select_degree_discount(g, full_probs,
                                     table.set(table.first_full_size_set()).k(),
                                     config.force_mean_p);
    for (int si = table.first_full_size_set(); si < table.num_sets(); ++si) {
      if (table.set(si).members == r.target.members) return si;
    }
    throw std::logic_error("selected set missing from candidate table");
  }
  throw InputError("audit does not support selector: " + config.selector);
}

std::vector<ReportCoordinate> agent_coordinates(const SocialGraph& g,
                                                NodeId agent,
                                                MechanismModel model) {
  std::vector<ReportCoordinate> coords;
  for (int e : g.out_edges(agent)) coords.push_back({e, true});
  if (model == MechanismModel::kInfluencerInfluencee) {
    for (int e : g.in_edges(agent)) coords.push_back({e, false});
  }
  return coords;
}

DeviationReport audit_influencer_agent(const SocialGraph& g,
                                       const OutcomeTable& table,
                                       const TruthProfile& truth, NodeId agent,
                                       const MechanismConfig& config,
                                       const AuditOptions& options,
                                       const std::vector<double>& others) {
  GridInfo grid = make_grid(g.epsilon());
  std::vector<ReportCoordinate> coords =
      agent_coordinates(g, agent, MechanismModel::kInfluencer);
  const int m = static_cast<int>(coords.size());

  // The agent's point-mass view: its own true probabilities, everyone
  // else's reports taken at face value.
  std::vector<double> sub_probs = others;
  std::vector<int> varying;
  std::vector<int> truth_digits(m);
  for (int j = 0; j < m; ++j) {
    int e = coords[j].edge;
    sub_probs[e] = truth.theta[e];
    varying.push_back(e);
    truth_digits[j] = grid_digit(truth.theta[e], grid);
  }

  std::vector<double> sub_sigma = table.sigmas(sub_probs);
  std::vector<double> sub_val;
  if (!options.payments) sub_val = table.valuations(sub_probs, agent);

  double h = 0.0;
  if (options.payments && config.h_mode == HMode::kClarkePivot) {
    std::vector<double> zeroed = others;
    for (int e : g.out_edges(agent)) zeroed[e] = 0.0;
    std::vector<double> zs = table.sigmas(zeroed);
    int pivot = table.select_exact_index(zs);
    double v_agent = table.valuations(zeroed, agent)[pivot];
    bool in_pivot = table.set(pivot).contains(agent);
    h = zs[pivot] - v_agent - (in_pivot ? 1.0 : 0.0);
  }

  OutcomeTable::Conditioned ce = table.condition(others, varying, -1);
  std::vector<double> sigmas;
  std::vector<double> varying_probs(m);
  std::vector<double> full_probs = others;

  auto utility_for = [&](const std::vector<int>& digits) {
    for (int j = 0; j < m; ++j) {
      varying_probs[j] = grid.values[digits[j]];
      full_probs[varying[j]] = varying_probs[j];
    }
    ce.eval_sigmas(varying_probs.data(), sigmas);
    int si = select_index(table, sigmas, g, full_probs, config);
    return options.payments ? sub_sigma[si] - h : sub_val[si];
  };

  DeviationReport report;
  report.agent = agent;
  report.coordinates = coords;
  report.truthful_utility = utility_for(truth_digits);

  bool have_best = false;
  std::vector<int> best_digits;
  auto [checked, exhaustive] = scan_deviations(
      m, grid, truth_digits, options.exhaustive_limit,
      options.fallback_samples, derive_seed(options.sample_seed, agent),
      [&](const std::vector<int>& digits) {
        double u = utility_for(digits);
        if (!have_best || u > report.best_deviation_utility) {
          have_best = true;
          report.best_deviation_utility = u;
          best_digits = digits;
        }
      });
  report.deviations_checked = checked;
  report.exhaustive = exhaustive;
  if (!have_best) report.best_deviation_utility = report.truthful_utility;
  report.gap = report.truthful_utility - report.best_deviation_utility;
  report.best_deviation.resize(m);
  for (int j = 0; j < m; ++j) {
    report.best_deviation[j] =
        have_best ? grid.values[best_digits[j]] : truth.theta[coords[j].edge];
  }
  return report;
}

double combined_value(double deviation, double counterpart, bool as_influencer,
                      CombineMode mode, double epsilon) {
  switch (mode) {
    case CombineMode::kMean:
      return snap_to_grid(0.5 * (deviation + counterpart), epsilon).value;
    case CombineMode::kInfluencer:
      return as_influencer ? deviation : counterpart;
    case CombineMode::kInfluencee:
      return as_influencer ? counterpart : deviation;
  }
  return deviation;
}

DeviationReport audit_scoring_agent(const SocialGraph& g,
                                    const OutcomeTable& table,
                                    const TruthProfile& truth, NodeId agent,
                                    const MechanismConfig& config,
                                    const AuditOptions& options) {
  GridInfo grid = make_grid(g.epsilon());
  std::vector<ReportCoordinate> coords =
      agent_coordinates(g, agent, MechanismModel::kInfluencerInfluencee);
  const int m = static_cast<int>(coords.size());
  const double eps = g.epsilon();

  // Everyone truthful: combined probabilities equal the ground truth, and the
  // agent expects its counterparts' reports to equal the truth (point mass).
  std::vector<int> varying;
  std::vector<int> truth_digits(m);
  std::vector<std::vector<double>> comb_val(m), score_val(m);
  double beta = 0.0;
  for (int j = 0; j < m; ++j) {
    int e = coords[j].edge;
    varying.push_back(e);
    truth_digits[j] = grid_digit(truth.theta[e], grid);
    comb_val[j].resize(grid.levels);
    score_val[j].resize(grid.levels);
    Distribution w = binary_distribution(truth.theta[e]);
    for (int u = 0; u < grid.levels; ++u) {
      comb_val[j][u] = combined_value(grid.values[u], truth.theta[e],
                                      coords[j].as_influencer, config.combine,
                                      eps);
      score_val[j][u] =
          expected_score(config.rule, binary_distribution(grid.values[u]), w);
    }
    beta += score_val[j][truth_digits[j]];
  }

  std::vector<double> v_true = table.valuations(truth.theta, agent);
  OutcomeTable::Conditioned ce = table.condition(truth.theta, varying, -1);

  double degree = g.in_degree(agent) + g.out_degree(agent);
  double big_d = degree * degree / (2.0 * eps * eps);

  std::vector<double> sigmas;
  std::vector<double> varying_probs(m);
  std::vector<double> full_probs = truth.theta;

  auto evaluate = [&](const std::vector<int>& digits, double& utility,
                      double& valuation) {
    double score_sum = 0.0;
    for (int j = 0; j < m; ++j) {
      varying_probs[j] = comb_val[j][digits[j]];
      full_probs[varying[j]] = varying_probs[j];
      score_sum += score_val[j][digits[j]];
    }
    ce.eval_sigmas(varying_probs.data(), sigmas);
    int si = select_index(table, sigmas, g, full_probs, config);
    valuation = v_true[si];
    utility =
        options.payments ? (valuation + big_d) * score_sum : valuation;
  };

  DeviationReport report;
  report.agent = agent;
  report.coordinates = coords;
  double v_truthful = 0.0;
  evaluate(truth_digits, report.truthful_utility, v_truthful);

  bool have_best = false;
  std::vector<int> best_digits;
  const bool spot_check =
      options.payments && config.rule == RuleId::kQuadratic;
  auto [checked, exhaustive] = scan_deviations(
      m, grid, truth_digits, options.exhaustive_limit,
      options.fallback_samples, derive_seed(options.sample_seed, agent),
      [&](const std::vector<int>& digits) {
        double u = 0.0, v = 0.0;
        evaluate(digits, u, v);
        if (!have_best || u > report.best_deviation_utility) {
          have_best = true;
          report.best_deviation_utility = u;
          best_digits = digits;
        }
        if (spot_check) {
          double delta = v - v_truthful;
          double lhs = degree * degree + (v_truthful + delta) * 2.0 * eps * eps;
          if (lhs >= delta * beta - 1e-12 &&
              report.truthful_utility - u < -options.tolerance) {
            ++report.proof_check_mismatches;
          }
        }
      });
  report.deviations_checked = checked;
  report.exhaustive = exhaustive;
  if (!have_best) report.best_deviation_utility = report.truthful_utility;
  report.gap = report.truthful_utility - report.best_deviation_utility;
  report.best_deviation.resize(m);
  for (int j = 0; j < m; ++j) {
    report.best_deviation[j] =
        have_best ? grid.values[best_digits[j]] : truth.theta[coords[j].edge];
  }
  return report;
}

}  // namespace

DeviationReport audit_agent(const SocialGraph& g, const TruthProfile& truth,
                            NodeId agent, const MechanismConfig& config,
                            const AuditOptions& options,
                            const std::vector<double>* opponent_reports) {
  config.validate();
  OutcomeTable table(g, options.k);
  if (config.model == MechanismModel::kInfluencer) {
    const std::vector<double>& others =
        opponent_reports ? *opponent_reports : truth.theta;
    return audit_influencer_agent(g, table, truth, agent, config, options,
                                  others);
  }
  if (opponent_reports) {
    throw InputError("opponent profiles only apply to the influencer model");
  }
  return audit_scoring_agent(g, table, truth, agent, config, options);
}

AuditVerdict nash_check(const SocialGraph& g, const TruthProfile& truth,
                        const MechanismConfig& config,
                        const AuditOptions& options) {
  config.validate();
  OutcomeTable table(g, options.k);
  AuditVerdict verdict;
  bool first = true;
  for (NodeId agent = 0; agent < g.num_nodes(); ++agent) {
    if (agent_coordinates(g, agent, config.model).empty()) continue;
    DeviationReport report =
        config.model == MechanismModel::kInfluencer
            ? audit_influencer_agent(g, table, truth, agent, config, options,
                                     truth.theta)
            : audit_scoring_agent(g, table, truth, agent, config, options);
    if (first || report.gap < verdict.min_gap) {
      first = false;
      verdict.min_gap = report.gap;
    }
    verdict.reports.push_back(std::move(report));
  }
  verdict.pass = verdict.min_gap >= -options.tolerance;
  return verdict;
}

AuditVerdict dominant_strategy_check(const SocialGraph& g,
                                     const TruthProfile& truth,
                                     const MechanismConfig& config,
                                     const AuditOptions& options, int profiles,
                                     uint64_t profile_seed) {
  if (config.model != MechanismModel::kInfluencer) {
    throw InputError("dominant_strategy_check applies to the influencer model");
  }
  config.validate();
  OutcomeTable table(g, options.k);
  GridInfo grid = make_grid(g.epsilon());

  AuditVerdict verdict;
  bool first = true;
  for (NodeId agent = 0; agent < g.num_nodes(); ++agent) {
    if (g.out_degree(agent) == 0) continue;
    DeviationReport worst;
    bool have_worst = false;
    int64_t total_checked = 0;
    for (int p = 0; p < profiles; ++p) {
      std::vector<double> others = truth.theta;
      Rng rng(derive_seed(profile_seed,
                          static_cast<uint64_t>(agent) * 1000003ULL + p));
      for (int e = 0; e < g.num_edges(); ++e) {
        if (g.edge(e).src == agent) continue;
        others[e] = grid.values[rng.next_below(grid.levels)];
      }
      DeviationReport report = audit_influencer_agent(
          g, table, truth, agent, config, options, others);
      total_checked += report.deviations_checked;
      if (!have_worst || report.gap < worst.gap) {
        have_worst = true;
        worst = std::move(report);
      }
    }
    worst.deviations_checked = total_checked;
    if (first || worst.gap < verdict.min_gap) {
      first = false;
      verdict.min_gap = worst.gap;
    }
    verdict.reports.push_back(std::move(worst));
  }
  verdict.pass = verdict.min_gap >= -options.tolerance;
  return verdict;
}

// --- Fixture ----------------------------------------------------------------

Fig2Nodes fig2_nodes() {
  return Fig2Nodes{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
}

SocialGraph build_fig2_fixture() {
  Fig2Nodes f = fig2_nodes();
  std::vector<Edge> edges{
      {f.j, f.k}, {f.j, f.l}, {f.j, f.a}, {f.j, f.b}, {f.k, f.l}, {f.k, f.m},
      {f.m, f.q1}, {f.q1, f.q2}, {f.i, f.k}, {f.i, f.p}, {f.p, f.m},
  };
  std::vector<double> probs(edges.size(), 1.0);
  std::vector<std::string> labels{"p", "a", "b", "i", "j",
                                  "k", "l", "m", "q1", "q2"};
  return SocialGraph(10, 0.1, std::move(edges), std::move(probs),
                     std::move(labels));
}

// --- Rendering ---------------------------------------------------------------

std::string deviation_reports_to_json(
    const std::vector<DeviationReport>& reports, const SocialGraph& g,
    bool pass, double min_gap) {
  nlohmann::json j;
  j["verdict"] = pass ? "pass" : "fail";
  j["min_gap"] = min_gap;
  nlohmann::json agents = nlohmann::json::array();
  for (const DeviationReport& r : reports) {
    nlohmann::json ja;
    ja["agent"] = r.agent;
    if (g.has_labels()) ja["label"] = g.label(r.agent);
    ja["truthful_utility"] = r.truthful_utility;
    ja["best_deviation_utility"] = r.best_deviation_utility;
    ja["gap"] = r.gap;
    ja["deviations_checked"] = r.deviations_checked;
    ja["exhaustive"] = r.exhaustive;
    nlohmann::json dev = nlohmann::json::array();
    for (size_t c = 0; c < r.coordinates.size(); ++c) {
      const Edge& e = g.edge(r.coordinates[c].edge);
      dev.push_back({{"src", e.src},
                     {"dst", e.dst},
                     {"role", r.coordinates[c].as_influencer ? "influencer"
                                                             : "influencee"},
                     {"report", r.best_deviation[c]}});
    }
    ja["best_deviation"] = dev;
    agents.push_back(ja);
  }
  j["agents"] = agents;
  return j.dump(2);
}

std::string deviation_reports_to_csv(
    const std::vector<DeviationReport>& reports, double tolerance) {
  std::ostringstream out;
  out << "agent,truthful_utility,best_deviation_utility,gap,verdict\n";
  for (const DeviationReport& r : reports) {
    out << r.agent << ',' << r.truthful_utility << ','
        << r.best_deviation_utility << ',' << r.gap << ','
        << (r.gap >= -tolerance ? "pass" : "fail") << '\n';
  }
  return out.str();
}

}  // namespace influmech

#include "influmech/mechanisms.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace influmech {

std::string model_name(MechanismModel model) {
  return model == MechanismModel::kInfluencer ? "influencer"
                                              : "influencer_influencee";
}

std::string h_mode_name(HMode h) {
  return h == HMode::kZero ? "zero" : "clarke_pivot";
}

std::string combine_mode_name(CombineMode mode) {
  switch (mode) {
    case CombineMode::kMean: return "mean";
    case CombineMode::kInfluencer: return "influencer";
    case CombineMode::kInfluencee: return "influencee";
  }
  return "unknown";
}

void MechanismConfig::validate() const {
  if (model == MechanismModel::kInfluencerInfluencee &&
      rule == RuleId::kLogarithmic && !allow_logarithmic) {
    throw InputError(
        "logarithmic rule is not a payment rule (unbounded at grid point 0); "
        "pass allow_logarithmic to override");
  }
}

std::vector<double> combine_reports(const SocialGraph& g,
                                    const EdgeReportProfile& profile,
                                    CombineMode mode) {
  if (mode == CombineMode::kInfluencer) return profile.influencer;
  if (mode == CombineMode::kInfluencee) return profile.influencee;
  std::vector<double> combined(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    double mean = 0.5 * (profile.influencer[e] + profile.influencee[e]);
    combined[e] = snap_to_grid(mean, g.epsilon()).value;
  }
  return combined;
}

namespace {

// Welfare shares w_j = v_j + [j in A] under the given probabilities.
std::vector<double> welfare_shares(const SocialGraph& g,
                                   const std::vector<double>& probs,
                                   const TargetSet& target,
                                   const Evaluator& evaluator) {
  ValuationVector vals = evaluator.valuations(g, probs, target);
  std::vector<double> w = vals.v;
  for (NodeId s : target.members) w[s] += 1.0;
  return w;
}

}  // namespace

PaymentLedger groves_payment(const SocialGraph& g,
                             const std::vector<double>& reported_probs,
                             const TargetSet& target, HMode h_mode,
                             const Evaluator& evaluator) {
  const int n = g.num_nodes();
  ValuationVector vals = evaluator.valuations(g, reported_probs, target);
  std::vector<double> w = vals.v;
  for (NodeId s : target.members) w[s] += 1.0;
  double w_total = 0.0;
  for (double x : w) w_total += x;

  std::vector<double> h(n, 0.0);
  if (h_mode == HMode::kClarkePivot) {
    for (NodeId i = 0; i < n; ++i) {
      // "Without agent i": i cannot influence anyone, but remains a node.
      std::vector<double> zeroed = reported_probs;
      for (int e : g.out_edges(i)) zeroed[e] = 0.0;
      SelectionResult pivot =
          select_exact(g, zeroed, target.k(), evaluator);
      std::vector<double> w_pivot =
          welfare_shares(g, zeroed, pivot.target, evaluator);
      double sum = 0.0;
      for (NodeId j = 0; j < n; ++j) {
        if (j != i) sum += w_pivot[j];
      }
      h[i] = sum;
    }
  }

  PaymentLedger ledger;
  ledger.mechanism = "groves_" + h_mode_name(h_mode);
  ledger.target = target;
  ledger.agents.resize(n);
  for (NodeId i = 0; i < n; ++i) {
    AgentEntry& a = ledger.agents[i];
    a.id = i;
    a.valuation = vals.v[i];
    a.payment = (w_total - w[i]) - h[i];
    a.utility = a.valuation + a.payment;
  }
  return ledger;
}

PaymentLedger scoring_payment(const SocialGraph& g,
                              const EdgeReportProfile& profile,
                              const TargetSet& target, RuleId rule,
                              CombineMode combine, const Evaluator& evaluator,
                              bool allow_logarithmic) {
  if (rule == RuleId::kLogarithmic && !allow_logarithmic) {
    throw InputError("logarithmic rule is not a payment rule");
  }
  std::vector<double> combined = combine_reports(g, profile, combine);
  ValuationVector vals = evaluator.valuations(g, combined, target);
  const double eps = g.epsilon();

  PaymentLedger ledger;
  ledger.mechanism = "scoring_" + rule_name(rule);
  ledger.target = target;
  ledger.agents.resize(g.num_nodes());
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    double score_sum = 0.0;
    // As influencee on in-edges and influencer on out-edges, agent i is
    // scored against the counterpart's report on the same edge.
    for (int e : g.in_edges(i)) {
      score_sum += expected_score(rule,
                                  binary_distribution(profile.influencee[e]),
                                  binary_distribution(profile.influencer[e]));
    }
    for (int e : g.out_edges(i)) {
      score_sum += expected_score(rule,
                                  binary_distribution(profile.influencer[e]),
                                  binary_distribution(profile.influencee[e]));
    }
    double degree = g.in_degree(i) + g.out_degree(i);
    double multiplier = vals.v[i] + degree * degree / (2.0 * eps * eps);

    AgentEntry& a = ledger.agents[i];
    a.id = i;
    a.valuation = vals.v[i];
    a.payment = degree == 0.0 ? 0.0 : multiplier * score_sum;
    a.utility = a.valuation + a.payment;
  }
  return ledger;
}

SelectionResult select_with_config(const SocialGraph& g,
                                   const std::vector<double>& probs, int k,
                                   const MechanismConfig& config) {
  if (config.selector == "exact") {
    return select_exact(g, probs, k, config.evaluator);
  }
  if (config.selector == "greedy") {
    return select_greedy(g, probs, k, config.evaluator);
  }
  if (config.selector == "high_degree") {
    return select_high_degree(g, k);
  }
  if (config.selector == "degree_discount") {
    return select_degree_discount(g, probs, k, config.force_mean_p);
  }
  throw InputError("unknown selector: " + config.selector);
}

MechanismRun run_mechanism(const SocialGraph& g,
                           const EdgeReportProfile& profile,
                           const MechanismConfig& config, int k) {
  config.validate();
  MechanismRun run;
  if (config.model == MechanismModel::kInfluencer) {
    // Only the influencer is asked in this model.
    run.selection_probs = profile.influencer;
    run.selection = select_with_config(g, run.selection_probs, k, config);
    run.ledger = groves_payment(g, run.selection_probs, run.selection.target,
                                config.h_mode, config.evaluator);
  } else {
    run.selection_probs = combine_reports(g, profile, config.combine);
    run.selection = select_with_config(g, run.selection_probs, k, config);
    run.ledger = scoring_payment(g, profile, run.selection.target, config.rule,
                                 config.combine, config.evaluator,
                                 config.allow_logarithmic);
  }
  return run;
}

std::string ledger_to_json(const PaymentLedger& ledger, const SocialGraph& g) {
  nlohmann::json j;
  j["mechanism"] = ledger.mechanism;
  j["target"] = ledger.target.members;
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (NodeId v : ledger.target.members) labels.push_back(g.label(v));
    j["target_labels"] = labels;
  }
  nlohmann::json agents = nlohmann::json::array();
  for (const AgentEntry& a : ledger.agents) {
    nlohmann::json ja{{"id", a.id},
                      {"valuation", a.valuation},
                      {"payment", a.payment},
                      {"utility", a.utility}};
    if (g.has_labels()) ja["label"] = g.label(a.id);
    agents.push_back(ja);
  }
  j["agents"] = agents;
  return j.dump(2);
}

std::string ledger_to_csv(const PaymentLedger& ledger) {
  std::ostringstream out;
  out << "id,valuation,payment,utility\n";
  for (const AgentEntry& a : ledger.agents) {
    out << a.id << ',' << a.valuation << ',' << a.payment << ',' << a.utility
        << '\n';
  }
  return out.str();
}

}  // namespace influmech

#pragma once

#include <string>
#include <vector>

#include "influmech/cascade.hpp"
#include "influmech/graph.hpp"
#include "influmech/scoring.hpp"
#include "influmech/selection.hpp"

namespace influmech {

enum class MechanismModel { kInfluencer, kInfluencerInfluencee };
enum class HMode { kZero, kClarkePivot };
enum class CombineMode { kMean, kInfluencer, kInfluencee };

std::string model_name(MechanismModel model);
std::string h_mode_name(HMode h);
std::string combine_mode_name(CombineMode mode);

struct AgentEntry {
  NodeId id = 0;
  double valuation = 0.0;
  double payment = 0.0;
  double utility = 0.0;  // valuation + payment
};

struct PaymentLedger {
  std::string mechanism;
  TargetSet target;
  std::vector<AgentEntry> agents;  // one entry per node

  const AgentEntry& agent(NodeId i) const { return agents[i]; }
};

std::string ledger_to_json(const PaymentLedger& ledger, const SocialGraph& g);
std::string ledger_to_csv(const PaymentLedger& ledger);

struct MechanismConfig {
  MechanismModel model = MechanismModel::kInfluencer;
  RuleId rule = RuleId::kQuadratic;       // second model only
  HMode h_mode = HMode::kZero;            // first model only
  CombineMode combine = CombineMode::kMean;
  Evaluator evaluator;
  std::string selector = "exact";         // exact | greedy | high_degree | ...
  bool allow_logarithmic = false;
  bool force_mean_p = false;

  void validate() const;
};

// Per-edge probabilities used for target selection, derived from the two
// reports. Mean combining snaps half-way points up.
std::vector<double> combine_reports(const SocialGraph& g,
                                    const EdgeReportProfile& profile,
                                    CombineMode mode);

// Groves payment in the influencer model:
//   p_i = sum_{j != i} w_j(A) - h_i,   w_j = v_j + [j in A],
// where w_j is agent j's welfare share under the reported probabilities
// (its expected activations plus its own seed activation) and the Clarke
// pivot h_i re-selects with agent i's outgoing probabilities zeroed.
PaymentLedger groves_payment(const SocialGraph& g,
                             const std::vector<double>& reported_probs,
                             const TargetSet& target, HMode h_mode,
                             const Evaluator& evaluator);

// Scoring-rule payment in the influencer-influencee model:
//   p_i = (v_i(A, combined) + d_i^2 / (2 eps^2)) * sum over incident edges of
//         V(own report | counterpart report)
// with d_i = in-degree + out-degree.
PaymentLedger scoring_payment(const SocialGraph& g,
                              const EdgeReportProfile& profile,
                              const TargetSet& target, RuleId rule,
                              CombineMode combine, const Evaluator& evaluator,
                              bool allow_logarithmic = false);

// Full pipeline: combine reports, select the target set, compute the ledger.
struct MechanismRun {
  SelectionResult selection;
  PaymentLedger ledger;
  std::vector<double> selection_probs;  // probabilities the planner used
};

MechanismRun run_mechanism(const SocialGraph& g,
                           const EdgeReportProfile& profile,
                           const MechanismConfig& config, int k);

// Target selection on given probabilities using config.selector.
SelectionResult select_with_config(const SocialGraph& g,
                                   const std::vector<double>& probs, int k,
                                   const MechanismConfig& config);

}  // namespace influmech

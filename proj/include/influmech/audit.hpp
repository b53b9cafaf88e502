#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "influmech/cascade.hpp"
#include "influmech/graph.hpp"
#include "influmech/mechanisms.hpp"

namespace influmech {

// Ground-truth edge probabilities; in the truthful profile both endpoint
// agents report exactly theta (the point-mass belief).
struct TruthProfile {
  std::vector<double> theta;

  EdgeReportProfile truthful() const {
    return EdgeReportProfile{theta, theta};
  }
};

TruthProfile truth_from_graph(const SocialGraph& g);

// One report slot owned by an agent: its influencer report on an out-edge or
// its influencee report on an in-edge (the latter only in the second model).
struct ReportCoordinate {
  int edge = 0;
  bool as_influencer = true;
};

struct DeviationReport {
  NodeId agent = 0;
  double truthful_utility = 0.0;
  double best_deviation_utility = 0.0;
  double gap = 0.0;  // truthful - best deviation
  std::vector<ReportCoordinate> coordinates;
  std::vector<double> best_deviation;  // aligned with coordinates
  int64_t deviations_checked = 0;
  bool exhaustive = true;
  // Model 2 with the quadratic rule: number of deviations where the proof
  // inequality d^2 + (v + delta) 2 eps^2 >= delta beta held but the utility
  // comparison pointed the other way. Expected to stay 0.
  int64_t proof_check_mismatches = 0;
};

struct AuditOptions {
  int k = 1;
  bool payments = true;
  int64_t exhaustive_limit = 1'000'000;  // deviation-grid size cap
  int64_t fallback_samples = 10'000;     // sampled deviations above the cap
  uint64_t sample_seed = 7;
  double tolerance = 1e-9;
};

struct AuditVerdict {
  std::vector<DeviationReport> reports;
  bool pass = true;
  double min_gap = 0.0;
};

// Audits one agent's unilateral grid deviations with every other agent fixed
// at the given reports (model 1: others' influencer reports; model 2: the
// truthful profile). Utilities follow the agent's point-mass view: its own
// true probabilities and the others' reports govern the evaluation.
DeviationReport audit_agent(const SocialGraph& g, const TruthProfile& truth,
                            NodeId agent, const MechanismConfig& config,
                            const AuditOptions& options,
                            const std::vector<double>* opponent_reports = nullptr);

// audit_agent for every agent that owns at least one report slot, all others
// truthful. Pass iff every gap >= -tolerance.
AuditVerdict nash_check(const SocialGraph& g, const TruthProfile& truth,
                        const MechanismConfig& config,
                        const AuditOptions& options);

// Influencer model: audits each agent against `profiles` sampled opponent
// report profiles (not necessarily truthful). Pass iff truthful reporting is
// a best response against every sampled profile.
AuditVerdict dominant_strategy_check(const SocialGraph& g,
                                     const TruthProfile& truth,
                                     const MechanismConfig& config,
                                     const AuditOptions& options,
                                     int profiles = 100,
                                     uint64_t profile_seed = 99);

// The stylized ten-node network behind the worked influencer-model example:
// all probabilities 1, sigma({j}) = 8, and node k gains by hiding its edge
// to m unless payments are in place.
SocialGraph build_fig2_fixture();

// Labelled nodes of the fixture.
struct Fig2Nodes {
  NodeId p, a, b, i, j, k, l, m, q1, q2;
};
Fig2Nodes fig2_nodes();

std::string deviation_reports_to_json(const std::vector<DeviationReport>& reports,
                                      const SocialGraph& g, bool pass,
                                      double min_gap);
std::string deviation_reports_to_csv(const std::vector<DeviationReport>& reports,
                                     double tolerance);

// --- Exact outcome-table evaluator --------------------------------------
//
// Enumerates every live/blocked outcome of all edges once and stores, per
// candidate target set, the reachable count and per-node attribution counts.
// Any probability vector is then a reweighting, which makes exhaustive
// deviation scans cheap. Exposed for tests; the audits use it internally.
class OutcomeTable {
 public:
  // Candidate sets: all node subsets of size 1..k in lexicographic order.
  OutcomeTable(const SocialGraph& g, int k);

  int num_sets() const { return static_cast<int>(sets_.size()); }
  const TargetSet& set(int idx) const { return sets_[idx]; }
  int first_full_size_set() const { return full_size_begin_; }

  // sigma(A) for every candidate set under the given probabilities.
  std::vector<double> sigmas(const std::vector<double>& probs) const;
  // v_agent(A) for every candidate set.
  std::vector<double> valuations(const std::vector<double>& probs,
                                 NodeId agent) const;

  // Index (within candidate sets) selected by exact maximization over the
  // size-k sets, lexicographically smallest argmax first.
  int select_exact_index(const std::vector<double>& sigmas) const;

  // Greedy over the table; returns the index of the chosen size-k set.
  int select_greedy_index(const std::vector<double>& probs) const;

  // Fixes all edges outside `varying` at base_probs and returns multilinear
  // coefficients so that sigma/valuation queries cost O(2^|varying|) per set.
  struct Conditioned {
    std::vector<int> varying;
    int num_sets = 0;
    std::vector<double> sigma_coeff;  // [set][vmask]
    std::vector<double> val_coeff;    // [set][vmask], empty if no agent

    void eval_sigmas(const double* varying_probs, std::vector<double>& out) const;
    void eval_valuations(const double* varying_probs, std::vector<double>& out) const;
  };
  Conditioned condition(const std::vector<double>& base_probs,
                        const std::vector<int>& varying, NodeId agent) const;

 private:
  const SocialGraph& g_;
  int k_;
  int full_size_begin_ = 0;
  std::vector<TargetSet> sets_;
  std::vector<uint8_t> sigma_x_;  // [set * outcomes + mask]
  std::vector<uint8_t> val_x_;    // [(set * outcomes + mask) * n + node]
  uint64_t outcomes_ = 0;
};

}  // namespace influmech

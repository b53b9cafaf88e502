#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace influmech {

using NodeId = int;

// Errors caused by malformed or out-of-contract input (files, flags,
// guard violations). The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A probability validated against the epsilon grid {0, eps, 2*eps, ..., 1}.
struct GridProb {
  double value = 0.0;
  double epsilon = 1.0;
};

// True if p is an integer multiple of eps within 1e-9.
bool on_grid(double p, double epsilon);

// Nearest grid multiple of eps; exact half-way points round up.
GridProb snap_to_grid(double p, double epsilon);

// Directed social graph with one activation probability per edge, all
// probabilities on a common epsilon grid. Immutable after construction;
// safe to share read-only across threads.
class SocialGraph {
 public:
  // Edges are canonicalized to (src, dst) order; probs align with them.
  SocialGraph(int n, double epsilon, std::vector<Edge> edges,
              std::vector<double> probs,
              std::vector<std::string> labels = {});

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  double epsilon() const { return epsilon_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<double>& probs() const { return probs_; }
  double prob(int e) const { return probs_[e]; }

  // Edge index for (src, dst), or -1 if absent.
  int edge_index(NodeId src, NodeId dst) const;

  // Outgoing / incoming edge indices per node.
  const std::vector<int>& out_edges(NodeId v) const { return out_[v]; }
  const std::vector<int>& in_edges(NodeId v) const { return in_[v]; }
  int out_degree(NodeId v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(NodeId v) const { return static_cast<int>(in_[v].size()); }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(NodeId v) const { return labels_[v]; }
  std::string display_name(NodeId v) const;

  // Copy with a different probability vector (same structure and grid).
  SocialGraph with_probs(std::vector<double> probs) const;

 private:
  int n_;
  double epsilon_;
  std::vector<Edge> edges_;
  std::vector<double> probs_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Per-edge reports from both endpoint agents, aligned with graph edge order.
struct EdgeReportProfile {
  std::vector<double> influencer;  // report by edge source
  std::vector<double> influencee;  // report by edge destination
};

SocialGraph load_graph(std::istream& in);
SocialGraph load_graph_file(const std::string& path);
std::string serialize_graph(const SocialGraph& g);

EdgeReportProfile load_reports(std::istream& in, const SocialGraph& g);
EdgeReportProfile load_reports_file(const std::string& path,
                                    const SocialGraph& g);
std::string serialize_reports(const SocialGraph& g,
                              const EdgeReportProfile& profile);

// Profile where both parties report the graph's own probabilities.
EdgeReportProfile truthful_profile(const SocialGraph& g);

}  // namespace influmech

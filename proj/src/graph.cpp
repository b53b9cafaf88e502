#include "influmech/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace influmech {

namespace {

constexpr double kGridTol = 1e-9;

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw InputError("epsilon must lie in (0, 1], got " +
                     std::to_string(epsilon));
  }
  double units = 1.0 / epsilon;
  if (std::abs(units - std::llround(units)) > kGridTol) {
    throw InputError("1/epsilon must be an integer, got epsilon = " +
                     std::to_string(epsilon));
  }
}

}  // namespace

bool on_grid(double p, double epsilon) {
  if (p < -kGridTol || p > 1.0 + kGridTol) return false;
  double units = p / epsilon;
  return std::abs(units - std::llround(units)) * epsilon <= kGridTol;
}

GridProb snap_to_grid(double p, double epsilon) {
  check_epsilon(epsilon);
  if (p < 0.0 || p > 1.0) {
    throw InputError("snap_to_grid: probability out of [0,1]: " +
                     std::to_string(p));
  }
  long long lo = static_cast<long long>(std::floor(p / epsilon));
  long long max_units = std::llround(1.0 / epsilon);
  lo = std::clamp(lo, 0LL, max_units);
  long long hi = std::min(lo + 1, max_units);
  double d_lo = std::abs(p - static_cast<double>(lo) * epsilon);
  double d_hi = std::abs(static_cast<double>(hi) * epsilon - p);
  // Half-way points round up.
  long long units = (d_lo < d_hi - kGridTol) ? lo : hi;
  return GridProb{static_cast<double>(units) * epsilon, epsilon};
}

SocialGraph::SocialGraph(int n, double epsilon, std::vector<Edge> edges,
                         std::vector<double> probs,
                         std::vector<std::string> labels)
    : n_(n),
      epsilon_(epsilon),
      edges_(std::move(edges)),
      probs_(std::move(probs)),
      labels_(std::move(labels)) {
  if (n_ < 1) throw InputError("node count must be positive");
  check_epsilon(epsilon_);
  if (probs_.size() != edges_.size()) {
    throw InputError("edge/probability count mismatch");
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_) {
    throw InputError("labels array must have one entry per node");
  }

  // Canonical (src, dst) order keeps edge indices stable across loads and
  // makes the coin stream well defined.
  std::vector<int> order(edges_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return edges_[a] < edges_[b]; });
  std::vector<Edge> sorted_edges;
  std::vector<double> sorted_probs;
  sorted_edges.reserve(edges_.size());
  sorted_probs.reserve(edges_.size());
  for (int idx : order) {
    sorted_edges.push_back(edges_[idx]);
    sorted_probs.push_back(probs_[idx]);
  }
  edges_ = std::move(sorted_edges);
  probs_ = std::move(sorted_probs);

  out_.assign(n_, {});
  in_.assign(n_, {});
  for (int e = 0; e < num_edges(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.src < 0 || ed.src >= n_ || ed.dst < 0 || ed.dst >= n_) {
      throw InputError("edge " + std::to_string(e) + ": endpoint out of range");
    }
    if (ed.src == ed.dst) {
      throw InputError("edge " + std::to_string(e) + ": self-loop at node " +
                       std::to_string(ed.src));
    }
    if (e > 0 && edges_[e - 1] == ed) {
      throw InputError("duplicate directed edge (" + std::to_string(ed.src) +
                       "," + std::to_string(ed.dst) + ")");
    }
    if (!on_grid(probs_[e], epsilon_)) {
      throw InputError("edge (" + std::to_string(ed.src) + "," +
                       std::to_string(ed.dst) + "): probability " +
                       std::to_string(probs_[e]) + " is off the epsilon=" +
                       std::to_string(epsilon_) + " grid");
    }
    out_[ed.src].push_back(e);
    in_[ed.dst].push_back(e);
  }
}

int SocialGraph::edge_index(NodeId src, NodeId dst) const {
  Edge key{src, dst};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || !(*it == key)) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::string SocialGraph::display_name(NodeId v) const {
  if (has_labels()) return labels_[v];
  return std::to_string(v);
}

SocialGraph SocialGraph::with_probs(std::vector<double> probs) const {
  return SocialGraph(n_, epsilon_, edges_, std::move(probs), labels_);
}

namespace {

using nlohmann::json;

json parse_json(std::istream& in, const char* what) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
  return j;
}

double require_number(const json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw InputError(ctx + ": missing numeric field \"" + key + "\"");
  }
  return j[key].get<double>();
}

int require_int(const json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw InputError(ctx + ": missing integer field \"" + key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace

SocialGraph load_graph(std::istream& in) {
  json j = parse_json(in, "graph file");
  int n = require_int(j, "n", "graph");
  double epsilon = require_number(j, "epsilon", "graph");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw InputError("graph: labels must be an array");
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  }

  std::vector<Edge> edges;
  std::vector<double> probs;
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw InputError("graph: missing \"edges\" array");
  }
  int pos = 0;
  for (const auto& je : j["edges"]) {
    std::string ctx = "edge " + std::to_string(pos);
    edges.push_back(Edge{require_int(je, "src", ctx), require_int(je, "dst", ctx)});
    probs.push_back(require_number(je, "p", ctx));
    ++pos;
  }
  return SocialGraph(n, epsilon, std::move(edges), std::move(probs),
                     std::move(labels));
}

SocialGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  return load_graph(in);
}

std::string serialize_graph(const SocialGraph& g) {
  json j;
  j["n"] = g.num_nodes();
  j["epsilon"] = g.epsilon();
  if (g.has_labels()) {
    json labels = json::array();
    for (int v = 0; v < g.num_nodes(); ++v) labels.push_back(g.label(v));
    j["labels"] = labels;
  }
  json edges = json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    edges.push_back({{"src", g.edge(e).src},
                     {"dst", g.edge(e).dst},
                     {"p", g.prob(e)}});
  }
  j["edges"] = edges;
  return j.dump(2);
}

EdgeReportProfile load_reports(std::istream& in, const SocialGraph& g) {
  json j = parse_json(in, "reports file");
  if (!j.contains("reports") || !j["reports"].is_array()) {
    throw InputError("reports: missing \"reports\" array");
  }
  EdgeReportProfile profile;
  profile.influencer.assign(g.num_edges(), -1.0);
  profile.influencee.assign(g.num_edges(), -1.0);
  int pos = 0;
  for (const auto& jr : j["reports"]) {
    std::string ctx = "report " + std::to_string(pos);
    int src = require_int(jr, "src", ctx);
    int dst = require_int(jr, "dst", ctx);
    int e = (src >= 0 && src < g.num_nodes()) ? g.edge_index(src, dst) : -1;
    if (e < 0) {
      throw InputError(ctx + ": unknown edge (" + std::to_string(src) + "," +
                       std::to_string(dst) + ")");
    }
    if (profile.influencer[e] >= 0.0) {
      throw InputError(ctx + ": duplicate report for edge (" +
                       std::to_string(src) + "," + std::to_string(dst) + ")");
    }
    double a = require_number(jr, "influencer", ctx);
    double b = require_number(jr, "influencee", ctx);
    for (double r : {a, b}) {
      if (!on_grid(r, g.epsilon())) {
        throw InputError(ctx + ": report " + std::to_string(r) +
                         " is off the epsilon grid");
      }
    }
    profile.influencer[e] = a;
    profile.influencee[e] = b;
    ++pos;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (profile.influencer[e] < 0.0) {
      throw InputError("missing report for edge (" +
                       std::to_string(g.edge(e).src) + "," +
                       std::to_string(g.edge(e).dst) + ")");
    }
  }
  return profile;
}

EdgeReportProfile load_reports_file(const std::string& path,
                                    const SocialGraph& g) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open reports file: " + path);
  return load_reports(in, g);
}

std::string serialize_reports(const SocialGraph& g,
                              const EdgeReportProfile& profile) {
  json reports = json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    reports.push_back({{"src", g.edge(e).src},
                       {"dst", g.edge(e).dst},
                       {"influencer", profile.influencer[e]},
                       {"influencee", profile.influencee[e]}});
  }
  return json{{"reports", reports}}.dump(2);
}

EdgeReportProfile truthful_profile(const SocialGraph& g) {
  return EdgeReportProfile{g.probs(), g.probs()};
}

}  // namespace influmech

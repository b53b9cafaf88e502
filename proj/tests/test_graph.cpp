#include <doctest.h>

#include <cmath>
#include <sstream>

#include "influmech/graph.hpp"
#include "influmech/rng.hpp"

using namespace influmech;

namespace {

SocialGraph parse(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

}  // namespace

TEST_CASE("load_graph maps fields directly") {
  SocialGraph g = parse(
      R"({"n":2,"epsilon":0.1,"edges":[{"src":0,"dst":1,"p":0.3}]})");
  CHECK(g.num_nodes() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.prob(0) == doctest::Approx(0.3));
  CHECK(g.edge(0).src == 0);
  CHECK(g.edge(0).dst == 1);
  CHECK(g.out_degree(0) == 1);
  CHECK(g.in_degree(1) == 1);
}

TEST_CASE("load_graph rejects off-grid probabilities") {
  CHECK_THROWS_AS(
      parse(R"({"n":2,"epsilon":0.1,"edges":[{"src":0,"dst":1,"p":0.35}]})"),
      InputError);
}

TEST_CASE("load_graph rejects duplicates, self-loops and bad endpoints") {
  CHECK_THROWS_WITH_AS(
      parse(R"({"n":2,"epsilon":0.1,"edges":[
        {"src":0,"dst":1,"p":0.3},{"src":0,"dst":1,"p":0.5}]})"),
      doctest::Contains("duplicate"), InputError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"n":2,"epsilon":0.1,"edges":[{"src":1,"dst":1,"p":0.3}]})"),
      doctest::Contains("self-loop"), InputError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"n":2,"epsilon":0.1,"edges":[{"src":0,"dst":2,"p":0.3}]})"),
      doctest::Contains("out of range"), InputError);
  CHECK_THROWS_AS(parse(R"({"n":2,"epsilon":0.1})"), InputError);
  CHECK_THROWS_AS(parse("{not json"), InputError);
}

TEST_CASE("edges are canonicalized by (src, dst)") {
  SocialGraph g = parse(
      R"({"n":3,"epsilon":0.1,"edges":[
        {"src":2,"dst":0,"p":0.5},{"src":0,"dst":1,"p":0.3},
        {"src":0,"dst":2,"p":0.9}]})");
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge(2) == Edge{2, 0});
  CHECK(g.prob(0) == doctest::Approx(0.3));
  CHECK(g.prob(2) == doctest::Approx(0.5));
  CHECK(g.edge_index(0, 2) == 1);
  CHECK(g.edge_index(1, 0) == -1);
}

TEST_CASE("serialize/load round-trip") {
  SocialGraph g = parse(
      R"({"n":4,"epsilon":0.2,"labels":["a","b","c","d"],"edges":[
        {"src":3,"dst":1,"p":0.4},{"src":0,"dst":3,"p":1.0},
        {"src":1,"dst":2,"p":0.0}]})");
  SocialGraph g2 = parse(serialize_graph(g));
  CHECK(g2.num_nodes() == g.num_nodes());
  CHECK(g2.edges() == g.edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    CHECK(g2.prob(e) == doctest::Approx(g.prob(e)));
  }
  CHECK(g2.label(0) == "a");
}

TEST_CASE("snap_to_grid basics") {
  CHECK(snap_to_grid(0.0, 0.1).value == doctest::Approx(0.0));
  CHECK(snap_to_grid(0.349, 0.1).value == doctest::Approx(0.3));
  // Half-way rounds up.
  CHECK(snap_to_grid(0.35, 0.1).value == doctest::Approx(0.4));
  CHECK(snap_to_grid(1.0, 0.1).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(snap_to_grid(1.5, 0.1), InputError);
}

TEST_CASE("snap_to_grid properties: identity on grid, error at most eps/2") {
  for (double eps : {0.1, 0.05, 0.25}) {
    long long units = std::llround(1.0 / eps);
    for (long long u = 0; u <= units; ++u) {
      double p = static_cast<double>(u) * eps;
      CHECK(snap_to_grid(p, eps).value == doctest::Approx(p).epsilon(1e-12));
    }
    Rng rng(13);
    for (int trial = 0; trial < 2000; ++trial) {
      double p = rng.next_unit();
      double snapped = snap_to_grid(p, eps).value;
      CHECK(on_grid(snapped, eps));
      CHECK(std::abs(snapped - p) <= eps / 2 + 1e-9);
    }
  }
}

TEST_CASE("load_reports: lossless storage and edge coverage validation") {
  SocialGraph g = parse(
      R"({"n":3,"epsilon":0.1,"edges":[
        {"src":0,"dst":1,"p":0.3},{"src":1,"dst":2,"p":0.5}]})");

  std::istringstream ok(R"({"reports":[
    {"src":0,"dst":1,"influencer":0.3,"influencee":0.5},
    {"src":1,"dst":2,"influencer":0.5,"influencee":0.5}]})");
  EdgeReportProfile p = load_reports(ok, g);
  CHECK(p.influencer[0] == doctest::Approx(0.3));
  CHECK(p.influencee[0] == doctest::Approx(0.5));  // stored verbatim

  std::istringstream missing(R"({"reports":[
    {"src":0,"dst":1,"influencer":0.3,"influencee":0.3}]})");
  CHECK_THROWS_WITH_AS(load_reports(missing, g),
                       doctest::Contains("missing report for edge (1,2)"),
                       InputError);

  std::istringstream unknown(R"({"reports":[
    {"src":2,"dst":0,"influencer":0.3,"influencee":0.3}]})");
  CHECK_THROWS_WITH_AS(load_reports(unknown, g),
                       doctest::Contains("unknown edge"), InputError);

  std::istringstream offgrid(R"({"reports":[
    {"src":0,"dst":1,"influencer":0.33,"influencee":0.3},
    {"src":1,"dst":2,"influencer":0.5,"influencee":0.5}]})");
  CHECK_THROWS_WITH_AS(load_reports(offgrid, g),
                       doctest::Contains("off the epsilon grid"), InputError);
}

TEST_CASE("epsilon validation") {
  CHECK_THROWS_AS(
      parse(R"({"n":1,"epsilon":0.3,"edges":[]})"), InputError);
  CHECK_THROWS_AS(
      parse(R"({"n":1,"epsilon":0.0,"edges":[]})"), InputError);
  CHECK_NOTHROW(parse(R"({"n":1,"epsilon":1.0,"edges":[]})"));
  CHECK_NOTHROW(parse(R"({"n":1,"epsilon":0.05,"edges":[]})"));
}

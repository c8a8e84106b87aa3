#include <random>

#include "doctest.h"
#include "normrig/error.hpp"
#include "normrig/framework.hpp"
#include "support.hpp"

using namespace normrig;
using testsupport::vec;

namespace {

Framework make(const NormSpec& norm, std::vector<Vector> pts, const std::vector<std::pair<int, int>>& edges) {
  Graph g(pts.size());
  for (auto [a, b] : edges) g.add_edge(a, b);
  return Framework(g, std::move(pts), norm);
}

// support functional of the max norm: signed unit covector on the dominant coordinate
Vector linf_phi(const Vector& x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i].abs() > x[best].abs()) best = i;
  Vector phi(x.size(), Real(0));
  phi[best] = Real(x[best].sign());
  return phi;
}

const CountCheck& check_named(const RigidityVerdict& v, const std::string& id) {
  for (const auto& c : v.maxwell_report)
    if (c.id == id) return c;
  throw std::runtime_error("missing " + id);
}

}  // namespace

TEST_SUITE("framework") {
  TEST_CASE("rigidity map of the fig1c fixture") {
    auto doc = testsupport::fixture("fig1c");
    auto f = rigidity_map(*doc.framework);
    // edge order p1p2 p1p3 p1p4 p2p3 p2p4 p3p4; lengths read off the coordinates by hand
    REQUIRE(f.size() == 6);
    CHECK(f[0] == Real::parse("1.6"));
    CHECK(f[1] == Real::parse("0.8"));
    CHECK(f[2] == Real::parse("1.2"));
    CHECK(f[3] == Real::parse("1.2"));
    CHECK(f[4] == Real::parse("0.8"));
    CHECK(f[5] == Real::parse("1.2"));
  }

  TEST_CASE("rigidity matrix rows are signed support functionals") {
    for (const char* name : {"fig1a", "fig1c", "fig1e", "fig3a"}) {
      auto doc = testsupport::fixture(name);
      const auto& fw = *doc.framework;
      auto rm = rigidity_matrix(fw);
      const auto n = fw.graph().vertex_count();
      for (std::size_t r = 0; r < fw.graph().edge_count(); ++r) {
        const auto& e = fw.graph().edges()[r];
        auto phi = linf_phi(fw.difference(e));
        for (std::size_t v = 0; v < n; ++v)
          for (std::size_t i = 0; i < 2; ++i) {
            Real expect = v == e.u ? phi[i] : (v == e.v ? -phi[i] : Real(0));
            CHECK(rm.matrix(r, v * 2 + i) == expect);
          }
      }
    }
  }

  TEST_CASE("isostatic max-norm K4") {
    auto v = classify_rigidity(*testsupport::fixture("fig1c").framework);
    CHECK(v.verdict == Verdict::Isostatic);
    CHECK(v.rank == 6);
    CHECK(v.dim_trivial == 2);
    CHECK(v.context.backend == Backend::Exact);
    for (const auto& c : v.maxwell_report) CHECK(c.pass);
  }

  TEST_CASE("euclidean plane") {
    auto l2 = NormSpec::euclidean(2);
    auto tri = make(l2, {vec({"0", "0"}), vec({"1", "0"}), vec({"0", "1"})}, {{0, 1}, {1, 2}, {0, 2}});
    auto v = classify_rigidity(tri);
    CHECK(v.verdict == Verdict::Isostatic);
    CHECK(v.dim_trivial == 3);
    auto sq = make(l2, {vec({"0", "0"}), vec({"1", "0"}), vec({"1", "1"}), vec({"0", "1"})},
                   {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(classify_rigidity(sq).verdict == Verdict::Flexible);
    auto k4 = make(l2, {vec({"0", "0"}), vec({"3", "0"}), vec({"1", "2"}), vec({"1", "1/2"})},
                   {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto vk = classify_rigidity(k4);
    CHECK(vk.verdict == Verdict::RigidRedundant);
    CHECK(vk.rank == 5);
    CHECK_FALSE(check_named(vk, "subgraph-count").applicable);
  }

  TEST_CASE("max-norm triangle is flexible and fails the rigidity count") {
    auto tri = make(NormSpec::linf(2), {vec({"0", "0"}), vec({"2", "1"}), vec({"1", "3"})}, {{0, 1}, {1, 2}, {0, 2}});
    auto v = classify_rigidity(tri);
    CHECK(v.verdict == Verdict::Flexible);
    CHECK(v.dim_flex == 3);
    CHECK_FALSE(check_named(v, "rigid-count").applicable);
    CHECK_FALSE(check_named(v, "rigid-count").pass);
  }

  TEST_CASE("overbraced max-norm K5 fails sparsity") {
    auto doc = testsupport::fixture("fig1a");
    auto g = doc.framework->graph();
    g.add_edge("p2", "p3");
    g.add_edge("p4", "p6");
    auto v = classify_rigidity(Framework(g, doc.framework->points(), doc.norm));
    CHECK(v.verdict == Verdict::RigidRedundant);
    CHECK(v.rank == 8);
    const auto& c = check_named(v, "subgraph-count");
    CHECK(c.evaluated);
    CHECK_FALSE(c.pass);
    CHECK(c.witness.size() == 5);
  }

  TEST_CASE("edges on a cone boundary are not well-positioned") {
    auto fw = make(NormSpec::linf(2), {vec({"0", "0"}), vec({"1", "1"}), vec({"3", "0"})}, {{0, 1}, {1, 2}});
    auto wp = well_positioned(fw);
    CHECK_FALSE(wp.ok);
    REQUIRE(wp.bad_edges.size() == 1);
    CHECK(wp.bad_edges[0] == Edge(0, 1));
    CHECK(classify_rigidity(fw).verdict == Verdict::NotWellPositioned);
    CHECK_THROWS_AS(rigidity_matrix(fw), NotWellPositionedError);
  }

  TEST_CASE("construction errors") {
    Graph g(2);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(Framework(g, {vec({"0", "0"}), vec({"0", "0"})}, NormSpec::linf(2)), Error);
    CHECK_THROWS_AS(Framework(g, {vec({"0", "0"}), vec({"1", "0", "0"})}, NormSpec::linf(2)), Error);
    CHECK_THROWS_AS(Framework(g, {vec({"0", "0"})}, NormSpec::linf(2)), Error);
  }

  TEST_CASE("trivial flex dimensions") {
    ScalarContext ctx;
    auto two = [](const NormSpec& n, Vector a, Vector b) {
      Graph g(2);
      return Framework(g, {std::move(a), std::move(b)}, n);
    };
    CHECK(trivial_flex_space(two(NormSpec::linf(2), vec({"0", "0"}), vec({"1", "2"})), ctx).dimension() == 2);
    CHECK(trivial_flex_space(two(NormSpec::euclidean(2), vec({"0", "0"}), vec({"1", "2"})), ctx).dimension() == 3);
    CHECK(trivial_flex_space(two(NormSpec::euclidean(3), vec({"0", "0", "0"}), vec({"1", "2", "3"})), ctx)
              .dimension() == 5);
    CHECK(trivial_flex_space(two(NormSpec::linf(3), vec({"0", "0", "0"}), vec({"1", "2", "3"})), ctx).dimension() == 3);
  }

  TEST_CASE("flex space contains the trivial flexes") {
    auto fw = *testsupport::fixture("fig3a").framework;
    ScalarContext ctx;
    auto flex = flex_space(fw, ctx);
    CHECK(flex.dimension() == 3);
    auto rm = rigidity_matrix(fw);
    for (const auto& u : flex.basis) CHECK(is_zero_vector(rm.matrix * u, 0));
  }

  TEST_CASE("finite differences match the rigidity matrix") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int dim : {2, 3}) {
      for (const auto& norm : {NormSpec::euclidean(dim), NormSpec::lq(dim, Real(3)), NormSpec::linf(dim)}) {
        std::vector<Vector> pts;
        for (int v = 0; v < 5; ++v) {
          std::vector<double> p(dim);
          for (auto& x : p) x = u(rng);
          pts.push_back(from_doubles(p));
        }
        Graph g(5);
        for (int a = 0; a < 5; ++a)
          for (int b = a + 1; b < 5; ++b) g.add_edge(a, b);
        Framework fw(g, pts, norm);
        if (!well_positioned(fw).ok) continue;
        CHECK(finite_difference_check(fw, 10, 1e-6) <= 1e-5);
      }
    }
  }
}

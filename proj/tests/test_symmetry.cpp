#include "doctest.h"
#include "normrig/error.hpp"
#include "normrig/symmetry.hpp"
#include "support.hpp"

using namespace normrig;
using testsupport::vec;

namespace {

std::pair<std::size_t, std::size_t> fixed_counts(const Graph& g, const GroupAction& a, std::size_t el) {
  std::size_t v = 0, e = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) v += a.image(el, i) == i;
  for (const auto& x : g.edges()) e += a.image(el, x) == x;
  return {v, e};
}

const char* kSymmetric[] = {"fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig1f", "fig3a", "fig3b", "fig3c"};

}  // namespace

TEST_SUITE("symmetry") {
  TEST_CASE("fixtures validate") {
    for (const char* name : kSymmetric) {
      auto doc = testsupport::fixture(name);
      auto v = validate_symmetric_framework(*doc.framework, *doc.group);
      CHECK_MESSAGE(v.ok, name << ": " << v.message);
    }
    auto doc = testsupport::fixture("example3d");
    CHECK(validate_symmetric_framework(*doc.framework, *doc.group, 1e-9).ok);
  }

  TEST_CASE("a moved vertex breaks the symmetry") {
    auto doc = testsupport::fixture("fig1c");
    auto pts = doc.framework->points();
    pts[0][0] = Real::parse("-0.81");
    auto v = validate_symmetric_framework(doc.framework->with_points(pts), *doc.group);
    CHECK_FALSE(v.ok);
    REQUIRE(v.element);
    CHECK(doc.group->element_name(*v.element) == "r");
  }

  TEST_CASE("fixed elements match the captions") {
    auto count = [](const char* name, const char* el) {
      auto doc = testsupport::fixture(name);
      auto f = fixed_elements(doc.framework->graph(), *doc.group, el);
      return std::pair{f.vertices.size(), f.edges.size()};
    };
    CHECK(count("fig1a", "s").first == 1);
    CHECK(count("fig1b", "s").first == 2);
    CHECK(count("fig1c", "r") == std::pair<std::size_t, std::size_t>{0, 2});
    CHECK(count("fig1d", "r").first == 1);
    for (const char* el : {"r", "s", "rs"}) CHECK(count("fig1e", el) == std::pair<std::size_t, std::size_t>{1, 0});
    auto f = testsupport::fixture("fig1f");
    for (std::size_t g = 1; g < f.group->order(); ++g)
      CHECK(fixed_counts(f.framework->graph(), *f.group, g) == std::pair<std::size_t, std::size_t>{1, 0});
    CHECK(count("fig3c", "s") == std::pair<std::size_t, std::size_t>{0, 0});
  }

  TEST_CASE("operation classes") {
    auto M = [](std::vector<Vector> rows) { return Matrix::from_rows(rows); };
    auto c = classify_operation(M({vec({"-1", "0"}), vec({"0", "1"})}), 2);
    CHECK(c.kind == OpKind::Reflection);
    CHECK(c.fixed_space.size() == 1);
    c = classify_operation(M({vec({"-1", "0"}), vec({"0", "-1"})}), 2);
    CHECK(c.kind == OpKind::Rotation);
    CHECK(c.n == 2);
    c = classify_operation(M({vec({"0", "-1"}), vec({"1", "0"})}), 2);
    CHECK(c.kind == OpKind::Rotation);
    CHECK(c.n == 4);
    CHECK(c.symbol() == "C4");
    c = classify_operation(Matrix::identity(3), 3);
    CHECK(c.kind == OpKind::Identity);
    c = classify_operation(M({vec({"-1", "0", "0"}), vec({"0", "-1", "0"}), vec({"0", "0", "-1"})}), 3);
    CHECK(c.kind == OpKind::Inversion);
    c = classify_operation(M({vec({"0", "-1", "0"}), vec({"1", "0", "0"}), vec({"0", "0", "-1"})}), 3);
    CHECK(c.kind == OpKind::ImproperRotation);
    CHECK(c.n == 4);
    CHECK(c.order == 4);
    auto t = *builtin_group("c3h");
    int s3 = 0;
    for (const auto& m : t.tau) {
      auto k = classify_operation(m, 3);
      if (k.kind == OpKind::ImproperRotation) {
        CHECK(k.n == 3);
        CHECK(k.order == 6);
        ++s3;
      }
    }
    CHECK(s3 == 2);
  }

  TEST_CASE("characters follow the trace formulas") {
    for (const char* name : {"fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig1f", "fig3c", "example3d"}) {
      auto doc = testsupport::fixture(name);
      const auto& a = *doc.group;
      auto rows = character_table(*doc.framework, a, 1e-9);
      REQUIRE(rows.size() == a.order());
      for (std::size_t g = 0; g < a.order(); ++g) {
        auto [v, e] = fixed_counts(doc.framework->graph(), a, g);
        const double tr = trace(a.tau(g)).to_double();
        CHECK(rows[g].v_fixed == v);
        CHECK(rows[g].chi_pe == static_cast<long>(e));
        CHECK(rows[g].chi_tau_pv.to_double() == doctest::Approx(tr * v));
        CHECK(rows[g].chi_trivial.to_double() == doctest::Approx(tr));
        CHECK(rows[g].matches_table);
      }
    }
  }

  TEST_CASE("table entries") {
    SymmetryOpClass c2;
    c2.kind = OpKind::Rotation;
    c2.n = 2;
    c2.k = 1;
    c2.order = 2;
    auto [pv, t] = table_entries(c2, 2, 3);
    CHECK(pv == Real(-6));
    CHECK(t == Real(-2));
    SymmetryOpClass s;
    s.kind = OpKind::Reflection;
    s.n = 2;
    s.k = 1;
    s.order = 2;
    std::tie(pv, t) = table_entries(s, 3, 2);
    CHECK(pv == Real(2));
    CHECK(t == Real(1));
  }

  TEST_CASE("intertwining residual") {
    for (const char* name : kSymmetric)
      CHECK(intertwining_check(*testsupport::fixture(name).framework, *testsupport::fixture(name).group) == 0.0);
    auto doc = testsupport::fixture("example3d");
    CHECK(intertwining_check(*doc.framework, *doc.group, 1e-9) <= 1e-9);
  }

  TEST_CASE("count rules") {
    for (const char* name : {"fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig1f", "fig3c", "example3d"}) {
      auto doc = testsupport::fixture(name);
      CHECK_MESSAGE(symmetric_count_check(*doc.framework, *doc.group, 1e-9).pass(), name);
      CHECK_MESSAGE(character_equation_check(*doc.framework, *doc.group, 1e-9).pass(), name);
    }
    auto b = testsupport::fixture("fig3b");
    CHECK_FALSE(symmetric_count_check(*b.framework, *b.group).pass());
    auto a = testsupport::fixture("fig3a");
    CHECK(symmetric_count_check(*a.framework, *a.group).pass());
  }

  TEST_CASE("infinite isometry groups are not tabulated") {
    Graph g(2);
    g.add_edge(0, 1);
    Framework fw(g, {vec({"-1", "0"}), vec({"1", "0"})}, NormSpec::euclidean(2));
    auto t = *builtin_group("cs");
    auto a = make_action(t, complete_theta(t, {{"s", {1, 0}}}, 2));
    CHECK(validate_symmetric_framework(fw, a).ok);
    CHECK_THROWS_AS(character_table(fw, a), Error);
  }
}

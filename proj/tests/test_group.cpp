#include <cmath>
#include <set>

#include "doctest.h"
#include "normrig/error.hpp"
#include "normrig/group.hpp"
#include "normrig/norms.hpp"
#include "support.hpp"

using namespace normrig;
using testsupport::vec;

TEST_SUITE("group") {
  TEST_CASE("builtin orders and closure") {
    const std::map<std::string, std::size_t> orders{
        {"c1", 1}, {"cs", 2},    {"cs_diag", 2}, {"c2", 2},    {"c3", 3},   {"c4", 4},
        {"c6", 6}, {"c2v", 4},   {"c2v_diag", 4}, {"c4v", 8},  {"c1_3d", 1}, {"ci", 2},
        {"cs_xy", 2}, {"c2_z", 2}, {"c3_z", 3}, {"c3h", 6},  {"s4", 4},   {"s6", 6}};
    CHECK(builtin_group_names().size() == orders.size());
    for (const auto& [name, order] : orders) {
      auto t = builtin_group(name);
      REQUIRE(t);
      CHECK(t->elements.size() == order);
      std::set<std::string> names(t->elements.begin(), t->elements.end());
      CHECK(names.size() == order);
      for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
          CHECK(near(t->tau[t->table[a][b]], t->tau[a] * t->tau[b], 1e-9));
    }
    CHECK_FALSE(builtin_group("d17"));
  }

  TEST_CASE("builtin 2D groups act by max-norm isometries") {
    for (const char* name : {"cs", "cs_diag", "c2", "c4", "c2v", "c2v_diag", "c4v"}) {
      const auto t = *builtin_group(name);
      for (const auto& m : t.tau) CHECK(is_isometry(NormSpec::linf(2), m));
    }
    const auto t = *builtin_group("c3h");
    for (const auto& m : t.tau) CHECK(is_isometry(NormSpec::hexagonal_prism(), m));
  }

  TEST_CASE("theta completes from generators") {
    auto t = *builtin_group("c2v");
    // vertices 0..4: 0 fixed, s swaps 1<->2 and 3<->4, r swaps 1<->4 and 2<->3
    auto theta = complete_theta(t, {{"s", {0, 2, 1, 4, 3}}, {"r", {0, 4, 3, 2, 1}}}, 5);
    auto action = make_action(t, theta);
    auto rs = *action.find("rs");
    for (std::size_t v = 0; v < 5; ++v) CHECK(action.image(rs, v) == action.image(*action.find("r"), action.image(*action.find("s"), v)));
    CHECK(action.vertex_orbits().size() == 2);
    CHECK(action.stabilizer(0).size() == 4);
    CHECK(action.stabilizer(1).size() == 1);
    CHECK(action.inverse(rs) == rs);
    CHECK(action.element_order(*action.find("r")) == 2);
  }

  TEST_CASE("inconsistent theta is rejected") {
    auto t = *builtin_group("c2");
    CHECK_THROWS_AS(make_action(t, complete_theta(t, {{"r", {1, 2, 0}}}, 3)), Error);
  }

  TEST_CASE("group axioms are validated") {
    auto I = Matrix::identity(2);
    CHECK_THROWS_AS(GroupAction("bad", {"e", "a"}, {{0, 1}, {1, 1}}, {{0, 1}, {1, 0}}, {I, I}), Error);
  }

  TEST_CASE("graph action check") {
    auto doc = testsupport::fixture("fig1c");
    CHECK_FALSE(check_action_on_graph(*doc.group, doc.framework->graph()));
    // p1<->p2, p3<->p4 maps p1p3 to p2p4, absent here
    Graph g(4);
    g.add_edge(0, 2);
    CHECK(check_action_on_graph(*doc.group, g));
  }

  TEST_CASE("cyclic subgroups and restriction") {
    auto t = *builtin_group("c4v");
    std::vector<Permutation> theta(t.elements.size(), Permutation{0});
    auto a = make_action(t, theta);
    auto r = *a.find("r");
    auto sub = a.cyclic_subgroup(r);
    CHECK(sub.size() == 4);
    auto c4 = a.restricted(sub, "c4");
    CHECK(c4.order() == 4);
    CHECK(c4.element_order(1) == 4);
  }

  TEST_CASE("non-periodic generator is rejected") {
    const double c = std::cos(1.0), s = std::sin(1.0);
    auto rot = Matrix::from_rows({from_doubles({c, -s}), from_doubles({s, c})});
    CHECK_THROWS_AS(generate_group("irrational", 2, {{"r", rot}}), Error);
  }
}

#include <random>

#include "doctest.h"
#include "normrig/error.hpp"
#include "normrig/sparsity.hpp"
#include "support.hpp"

using namespace normrig;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_SUITE("sparsity") {
  TEST_CASE("pebble game agrees with subset enumeration") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> size(2, 8);
    std::uniform_real_distribution<double> dens(0.2, 0.9);
    for (int t = 0; t < 200; ++t) {
      auto g = random_graph(rng, size(rng), dens(rng));
      for (auto p : {SparsityParams{2, 2}, SparsityParams{2, 3}, SparsityParams{1, 1}, SparsityParams{3, 3}}) {
        auto r = is_sparse(g, p);
        CHECK(r.sparse == brute_force_sparse(g, p));
        CHECK(is_tight(g, p) == brute_force_tight(g, p));
        if (!r.sparse) CHECK(static_cast<long>(g.induced_edge_count(r.witness)) > p.bound(r.witness.size()));
      }
    }
  }

  TEST_CASE("named graphs") {
    CHECK(is_tight(complete(4), {2, 2}));
    CHECK_FALSE(is_sparse(complete(4), {2, 3}).sparse);
    CHECK(is_sparse(complete(3), {2, 2}).sparse);
    CHECK_FALSE(is_tight(complete(3), {2, 2}));
    CHECK(is_tight(complete(3), {2, 3}));
    Graph prism(6);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}})
      prism.add_edge(a, b);
    CHECK(is_tight(prism, {2, 3}));
    CHECK_FALSE(is_tight(prism, {2, 2}));
  }

  TEST_CASE("fixtures are (2,2)-tight") {
    for (const char* name : {"fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig1f", "fig3a", "fig3b", "fig3c"}) {
      auto g = testsupport::fixture(name).framework->graph();
      CHECK(is_tight(g, {2, 2}));
      CHECK(brute_force_tight(g, {2, 2}));
    }
    auto g3 = testsupport::fixture("example3d").framework->graph();
    CHECK(is_tight(g3, {3, 3}));
  }

  TEST_CASE("pebble game state is a value") {
    PebbleGame a(4, {2, 2});
    CHECK(a.try_add(0, 1));
    CHECK(a.try_add(0, 2));
    PebbleGame b = a;
    CHECK(b.try_add(1, 2));
    CHECK(b.accepted() == 3);
    CHECK(a.accepted() == 2);
    CHECK(a.free_pebbles() == 8 - 2);
  }

  TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(is_sparse(complete(3), {0, 0}), Error);
    CHECK_THROWS_AS(is_sparse(complete(3), {2, 4}), Error);
  }

  TEST_CASE("spanning tree decompositions") {
    CHECK(decomposes_into_spanning_trees(complete(4), 2));
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(decomposes_into_spanning_trees(path, 1));
    CHECK_FALSE(decomposes_into_spanning_trees(path, 2));
    for (const char* name : {"fig1a", "fig1d", "fig3a"})
      CHECK(decomposes_into_spanning_trees(testsupport::fixture(name).framework->graph(), 2));
  }

  TEST_CASE("symmetric tight subgraphs") {
    auto doc = testsupport::fixture("fig3a");
    auto subs = symmetric_tight_subgraphs(doc.framework->graph(), {2, 2}, *doc.group);
    REQUIRE_FALSE(subs.empty());
    for (const auto& s : subs) CHECK(static_cast<long>(doc.framework->graph().induced_edge_count(s)) ==
                                     SparsityParams{2, 2}.bound(s.size()));
    auto k5 = complete(5);
    auto trivial = make_action(*builtin_group("c1"), {Permutation{0, 1, 2, 3, 4}});
    CHECK_THROWS_AS(symmetric_tight_subgraphs(k5, {2, 2}, trivial), Error);
  }
}

#include "doctest.h"
#include "normrig/error.hpp"
#include "normrig/explorer.hpp"
#include "normrig/report.hpp"
#include "normrig/sparsity.hpp"
#include "normrig/symmetry.hpp"
#include "support.hpp"

using namespace normrig;

namespace {

ScanConfig config(const std::string& group, std::size_t lo, std::size_t hi) {
  ScanConfig c;
  c.group = group;
  c.min_vertices = lo;
  c.max_vertices = hi;
  c.trials = 100;
  return c;
}

bool moves_every_vertex(const GroupAction& a, std::size_t g) {
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    if (a.image(g, v) == v) return false;
  return true;
}

}  // namespace

TEST_SUITE("explorer") {
  TEST_CASE("no tight graph on three vertices") {
    CHECK(enumerate_candidates(config("c1", 3, 3)).empty());
  }

  TEST_CASE("K4 appears with a mirror action") {
    auto cands = enumerate_candidates(config("cs", 4, 4));
    bool k4 = false;
    for (const auto& c : cands) {
      CHECK(is_tight(c.graph, {2, 2}));
      k4 = k4 || c.graph.edge_count() == 6;
    }
    CHECK(k4);
  }

  TEST_CASE("K4 appears with a double transposition") {
    auto cands = enumerate_candidates(config("c2", 4, 4));
    bool found = false;
    for (const auto& c : cands)
      if (c.graph.edge_count() == 6 && moves_every_vertex(c.action, *c.action.find("r"))) found = true;
    CHECK(found);
  }

  TEST_CASE("placement search for K4 under a half-turn") {
    auto cfg = config("c2", 4, 4);
    for (const auto& c : enumerate_candidates(cfg)) {
      if (c.graph.edge_count() != 6 || !moves_every_vertex(c.action, *c.action.find("r"))) continue;
      auto r = search_placement(c.graph, c.action, cfg, c.id);
      REQUIRE(r.found);
      REQUIRE(r.witness);
      CHECK(classify_rigidity(*r.witness).verdict == Verdict::Isostatic);
      CHECK(validate_symmetric_framework(*r.witness, c.action).ok);
    }
  }

  TEST_CASE("the fig3a graph has no isostatic placement") {
    auto doc = testsupport::fixture("fig3a");
    auto cfg = config("cs", 8, 8);
    cfg.trials = 200;
    auto r = search_placement(doc.framework->graph(), *doc.group, cfg);
    CHECK_FALSE(r.found);
    CHECK(r.trials == 200);
    CHECK(r.well_positioned > 0);
    CHECK(r.max_rank < doc.framework->graph().edge_count());
  }

  TEST_CASE("facet-swapping mirror scan finds every witness") {
    auto cfg = config("cs_diag", 2, 6);
    cfg.trials = 200;
    auto rep = conjecture_scan(cfg);
    CHECK(rep.satisfying > 0);
    CHECK(rep.witnesses == rep.satisfying);
    CHECK(rep.possible_counterexamples == 0);
    CHECK(rep.would_refute == 0);
  }

  TEST_CASE("scans are deterministic") {
    auto cfg = config("c2", 2, 6);
    cfg.probe_violators = true;
    cfg.threads = 1;
    auto one = run_explore(cfg).json;
    cfg.threads = 4;
    CHECK(run_explore(cfg).json == one);
    cfg.seed = 99;
    CHECK(run_explore(cfg).json != one);
  }

  TEST_CASE("configuration limits") {
    auto cfg = config("cs", 2, 13);
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = config("cs", 2, 6);
    cfg.norm = NormSpec::euclidean(2);
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = config("nope", 2, 6);
    CHECK_THROWS_AS(enumerate_candidates(cfg), Error);
  }
}

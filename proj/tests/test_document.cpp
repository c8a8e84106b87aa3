#include <string>

#include "doctest.h"
#include "normrig/document.hpp"
#include "normrig/error.hpp"
#include "support.hpp"

using namespace normrig;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kAll[] = {"fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig1f", "fig3a", "fig3b", "fig3c", "example3d"};

}  // namespace

TEST_SUITE("document") {
  TEST_CASE("fixture loads") {
    auto doc = testsupport::fixture("fig1c");
    REQUIRE(doc.framework);
    CHECK(doc.norm_name == "linf2");
    CHECK(doc.framework->graph().vertex_count() == 4);
    CHECK(doc.framework->graph().edge_count() == 6);
    CHECK(doc.framework->point(0)[0] == Real(-4, 5));
    REQUIRE(doc.group);
    CHECK(doc.group->order() == 2);
    CHECK(doc.group_builtin == "c2");
  }

  TEST_CASE("rational strings stay exact") {
    auto doc = parse_document(R"({"norm": "linf3", "vertices": [{"id": "a", "point": ["-1/4", "-1", "1/4"]}]})");
    CHECK(doc.framework->point(0)[0] == Real(-1, 4));
    CHECK(doc.framework->point(0)[0].is_exact());
  }

  TEST_CASE("coincident points") {
    auto msg = error_of(R"({"norm": "linf2", "vertices": [{"id": "a", "point": [0, 0]}, {"id": "b", "point": ["0", "0"]}]})");
    CHECK(msg.find("placement not injective") != std::string::npos);
  }

  TEST_CASE("errors carry a location") {
    CHECK(error_of(R"({"vertices": []})").find("norm") != std::string::npos);
    CHECK(error_of(R"({"norm": "l7"})").find("/norm") == 0);
    CHECK(error_of(R"({"norm": "linf2", "vertices": [{"id": "a", "point": [0, 0]}, {"id": "a", "point": [1, 0]}]})")
              .find("/vertices/1/id") == 0);
    CHECK(error_of(R"({"norm": "linf2", "vertices": [{"id": "a", "point": [0, 0]}], "edges": [["a", "b"]]})")
              .find("/edges/0/1") == 0);
    CHECK(error_of(R"({"norm": "linf2", "vertices": [{"id": "a", "point": [0]}]})").find("/vertices/0/point") == 0);
    CHECK(error_of(R"({"norm": "linf2", "vertices": [{"id": "a", "point": [0, 0]}],
                       "group": {"builtin": "cs", "theta": {"s": {"z": "a"}}}})")
              .find("/group/theta/s/z") == 0);
    CHECK(error_of("{").find("malformed") != std::string::npos);
  }

  TEST_CASE("explicit group form") {
    auto doc = parse_document(R"({
      "norm": "linf2",
      "vertices": [{"id": "a", "point": ["-1", "1/2"]}, {"id": "b", "point": ["1", "1/2"]}],
      "edges": [["a", "b"]],
      "group": {"name": "mirror", "elements": ["id", "m"], "table": [["id", "m"], ["m", "id"]],
                "tau": {"m": [["-1", "0"], ["0", "1"]]}, "theta": {"m": {"a": "b", "b": "a"}}}})");
    REQUIRE(doc.group);
    CHECK(doc.group->name() == "mirror");
    CHECK(doc.group->image(1, 0) == 1);
    CHECK(doc.group_builtin.empty());
  }

  TEST_CASE("norm objects") {
    auto n = parse_norm(R"({"type": "polyhedral", "dim": 2, "facets": [[1, 0], [-1, 0], [0, 1], [0, -1]]})");
    CHECK(n.is_quadrilateral());
    CHECK(parse_norm("hexprism3").facets().size() == 8);
    CHECK(parse_norm(R"({"type": "lq", "dim": 3, "q": "3"})").kind() == NormKind::LQ);
    CHECK_THROWS_AS(parse_norm("nope"), Error);
  }

  TEST_CASE("serialization is idempotent") {
    for (const char* name : kAll) {
      auto once = serialize_document(testsupport::fixture(name));
      auto twice = serialize_document(parse_document(once));
      CHECK_MESSAGE(once == twice, name);
    }
  }

  TEST_CASE("options") {
    auto doc = testsupport::fixture("example3d");
    REQUIRE(doc.options.backend);
    CHECK(*doc.options.backend == Backend::Float);
    CHECK(doc.options.tolerance.value_or(0) == 1e-9);
    CHECK(error_of(R"({"norm": "linf2", "options": {"backend": "fast"}})").find("/options/backend") == 0);
  }
}

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "normrig/framework.hpp"
#include "normrig/group.hpp"

namespace normrig {

/// Edges labelled by the antipodal facet pair {F, -F} whose cone contains
/// the edge direction.
struct ColoredGraph {
  Graph graph;
  int dim = 2;
  std::size_t label_count = 0;
  /// Per edge (graph edge order): facet pair index and the facet itself.
  std::vector<int> labels;
  std::vector<std::size_t> facets;

  std::vector<Edge> monochrome(int label) const;
};

/// Throws NotWellPositionedError for non-smooth edge directions and
/// Unsupported for non-polyhedral norms.
ColoredGraph edge_colors(const Framework& fw, double tol = kDefaultTolerance);

/// Every monochrome subgraph is a spanning tree. Needs exactly two labels,
/// or, with `experimental_d_trees`, exactly `dim` labels.
bool tree_decomposition_check(const ColoredGraph& cg, bool experimental_d_trees = false);

enum class FacetAction { Preserves, Swaps };

const char* to_string(FacetAction a);

/// Whether tau maps every facet into its own pair {F, -F}. Quadrilateral
/// balls only.
FacetAction facet_action(const NormSpec& norm, const Matrix& tau, double tol = kDefaultTolerance);

enum class Strength { Proven, Conjectured, Diagnostic };

const char* to_string(Strength s);

struct Condition {
  std::string id;
  std::string statement;
  std::string element;
  Strength strength = Strength::Proven;
  bool pass = true;
  std::vector<std::size_t> witness;
};

struct ConditionReport {
  /// "c1", "cs-preserving", "cs-swapping", "c2", "c4", "c2v-preserving",
  /// "c2v-swapping", "c4v", or "other".
  std::string group_type;
  std::vector<std::pair<std::string, FacetAction>> facet_actions;
  std::vector<Condition> conditions;

  bool proven_pass() const;
  bool conjectured_pass() const;
  bool diagnostics_pass() const;
  /// First failing proven condition, if any.
  const Condition* first_proven_failure() const;
};

/// Necessary conditions for isostatic symmetric frameworks with a
/// quadrilateral unit ball, plus the clauses of the matching conjectured
/// characterisation. Graph mode needs no placement.
ConditionReport quadrilateral_conditions(const Graph& g, const GroupAction& action, const NormSpec& norm,
                                         double tol = kDefaultTolerance);

/// Framework mode: validates the symmetry first and adds the diagnostic that
/// the edge colouring commutes with facet-preserving operations.
ConditionReport quadrilateral_conditions(const Framework& fw, const GroupAction& action,
                                         double tol = kDefaultTolerance);

/// Vertex sets of the <g>-symmetric (2,2)-tight subgraphs with no vertex or
/// edge fixed by g.
std::vector<std::vector<std::size_t>> unfixed_symmetric_tight_subgraphs(const Graph& g,
                                                                         const GroupAction& action,
                                                                         std::size_t element);

}  // namespace normrig

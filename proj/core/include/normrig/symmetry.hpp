#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "normrig/framework.hpp"
#include "normrig/group.hpp"

namespace normrig {

struct SymmetryValidation {
  bool ok = true;
  std::string message;
  std::optional<std::size_t> element;
  std::optional<std::size_t> vertex;
};

/// tau(g) p(v) = p(g v) for all g, v, and every tau(g) an isometry of the
/// norm. Float comparisons use `tol` absolutely per coordinate.
SymmetryValidation validate_symmetric_framework(const Framework& fw, const GroupAction& action,
                                                double tol = kDefaultTolerance);

struct FixedElements {
  std::vector<std::size_t> vertices;
  std::vector<Edge> edges;
};

FixedElements fixed_elements(const Graph& g, const GroupAction& action, std::size_t element);
FixedElements fixed_elements(const Graph& g, const GroupAction& action, const std::string& element);

enum class OpKind { Identity, Reflection, Inversion, Rotation, ImproperRotation };

const char* to_string(OpKind kind);

/// Rotation(n) turns by 2 pi k / n on its plane; ImproperRotation(n) is such a
/// rotation followed by the reflection in that plane.
struct SymmetryOpClass {
  OpKind kind = OpKind::Identity;
  int n = 1;
  int k = 0;
  /// Multiplicative order of the matrix.
  int order = 1;
  /// Basis of the +1 eigenspace (mirror, axis) and of the -1 eigenspace.
  std::vector<Vector> fixed_space;
  std::vector<Vector> negated_space;

  /// "Id", "s", "i", "C4", "C4^3", "S6", ...
  std::string symbol() const;
};

SymmetryOpClass classify_operation(const Matrix& tau, int dim, double tol = kDefaultTolerance);

struct CharacterRow {
  std::string element;
  SymmetryOpClass op;
  std::size_t v_fixed = 0;
  std::size_t e_fixed = 0;
  long chi_pv = 0;
  long chi_pe = 0;
  Real trace;
  Real chi_tau_pv;
  Real chi_trivial;
  /// The row agrees with the closed-form entry of the character table for
  /// this operation class in dimension 2 or 3.
  bool matches_table = true;
};

/// Per-element characters of P_V, P_E, tau x P_V and of its trivial-flex
/// part. Unsupported when the norm has infinitely many isometries.
std::vector<CharacterRow> character_table(const Framework& fw, const GroupAction& action,
                                          double tol = kDefaultTolerance);

/// Closed-form (chi(tau x P_V), chi(T)) entries for an operation class.
std::pair<Real, Real> table_entries(const SymmetryOpClass& op, int dim, std::size_t v_fixed);

/// max |R (tau x P_V)(g) - P_E(g) R| over all g and entries.
double intertwining_check(const Framework& fw, const GroupAction& action, double tol = kDefaultTolerance);

struct RuleCheck {
  std::string element;
  std::string op;
  std::string rule;
  std::string statement;
  bool pass = true;
  std::size_t v_fixed = 0;
  std::size_t e_fixed = 0;
};

struct RuleReport {
  std::vector<RuleCheck> checks;
  bool pass() const;
};

/// Fixed-count rules every isostatic symmetric framework satisfies (finite
/// isometry group): |E_g| = tr(tau(g)) (|V_g| - 1) and the refinements for
/// the operation class of each g.
RuleReport symmetric_count_check(const Framework& fw, const GroupAction& action,
                                 double tol = kDefaultTolerance);

/// The same counts from the graph and tau alone (no placement needed).
RuleReport symmetric_count_check(const Graph& g, const GroupAction& action, double tol = kDefaultTolerance);

/// chi(P_E) = chi(tau x P_V) - chi(T) for every element, identity included.
RuleReport character_equation_check(const Framework& fw, const GroupAction& action,
                                    double tol = kDefaultTolerance);

}  // namespace normrig

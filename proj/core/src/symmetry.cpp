#include "normrig/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "normrig/error.hpp"

namespace normrig {

namespace {

constexpr int kMaxOrder = 1000;

bool same_coordinate(const Real& a, const Real& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return std::abs(a.to_double() - b.to_double()) <= tol;
}

int matrix_order(const Matrix& tau, double tol) {
  Matrix m = tau;
  for (int k = 1; k <= kMaxOrder; ++k) {
    if (is_identity(m, tol)) return k;
    m = m * tau;
  }
  throw Error(ErrorCode::NotFiniteOrder, "matrix has no power equal to I up to 1000");
}

// Smallest n (and k coprime to n, 0 <= k <= n/2) with cos(2 pi k / n) = c.
std::pair<int, int> angle_fraction(double c, int limit, double tol) {
  for (int n = 1; n <= limit; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      if (std::abs(std::cos(2.0 * std::numbers::pi * k / n) - c) <= std::max(tol, 1e-7)) return {n, k};
    }
  throw Error(ErrorCode::NotFiniteOrder, "rotation angle is not a rational multiple of 2 pi");
}

// 2 cos(2 pi k / n), exact when rational.
Real two_cos(int n, int k) {
  switch (n) {
    case 1: return 2;
    case 2: return -2;
    case 3: return -1;
    case 4: return 0;
    case 6: return 1;
    default: return Real::inexact(2.0 * std::cos(2.0 * std::numbers::pi * k / n));
  }
}

std::vector<Vector> eigenspace(const Matrix& tau, int sign, double tol) {
  Matrix m = tau;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= Real(sign);
  ScalarContext ctx{m.all_exact() ? Backend::Exact : Backend::Float, tol};
  return rank_nullspace(m, ctx).kernel;
}

}  // namespace

SymmetryValidation validate_symmetric_framework(const Framework& fw, const GroupAction& action, double tol) {
  SymmetryValidation out;
  auto fail = [&](std::string msg, std::optional<std::size_t> g, std::optional<std::size_t> v) {
    out.ok = false;
    out.message = std::move(msg);
    out.element = g;
    out.vertex = v;
    return out;
  };
  if (action.dim() != fw.dim())
    return fail("tau has dimension " + std::to_string(action.dim()) + ", framework has " +
                    std::to_string(fw.dim()),
                std::nullopt, std::nullopt);
  if (auto bad = check_action_on_graph(action, fw.graph(), tol)) return fail(*bad, std::nullopt, std::nullopt);
  for (std::size_t g = 0; g < action.order(); ++g) {
    bool iso = false;
    try {
      iso = is_isometry(fw.norm(), action.tau(g), tol);
    } catch (const Error&) {
      iso = false;
    }
    if (!iso) return fail("tau(" + action.element_name(g) + ") is not an isometry of the norm", g, std::nullopt);
  }
  for (std::size_t g = 0; g < action.order(); ++g) {
    for (std::size_t v = 0; v < fw.graph().vertex_count(); ++v) {
      Vector moved = action.tau(g) * fw.point(v);
      const Vector& target = fw.point(action.image(g, v));
      for (std::size_t i = 0; i < moved.size(); ++i) {
        if (!same_coordinate(moved[i], target[i], tol))
          return fail("tau(" + action.element_name(g) + ") p(" + fw.graph().id(v) + ") != p(" +
                          fw.graph().id(action.image(g, v)) + ")",
                      g, v);
      }
    }
  }
  return out;
}

FixedElements fixed_elements(const Graph& g, const GroupAction& action, std::size_t element) {
  if (element >= action.order()) throw Error(ErrorCode::InvalidInput, "unknown group element");
  if (action.vertex_count() != g.vertex_count())
    throw Error(ErrorCode::DimensionMismatch, "group action and graph differ in vertex count");
  FixedElements out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (action.image(element, v) == v) out.vertices.push_back(v);
  for (const auto& e : g.edges())
    if (action.image(element, e) == e) out.edges.push_back(e);
  return out;
}

FixedElements fixed_elements(const Graph& g, const GroupAction& action, const std::string& element) {
  auto idx = action.find(element);
  if (!idx) throw Error(ErrorCode::InvalidInput, "unknown group element '" + element + "'");
  return fixed_elements(g, action, *idx);
}

const char* to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Identity: return "Identity";
    case OpKind::Reflection: return "Reflection";
    case OpKind::Inversion: return "Inversion";
    case OpKind::Rotation: return "Rotation";
    case OpKind::ImproperRotation: return "ImproperRotation";
  }
  return "?";
}

std::string SymmetryOpClass::symbol() const {
  auto power = [&](const char* base) {
    std::string s = base + std::to_string(n);
    if (k > 1) s += "^" + std::to_string(k);
    return s;
  };
  switch (kind) {
    case OpKind::Identity: return "Id";
    case OpKind::Reflection: return "s";
    case OpKind::Inversion: return "i";
    case OpKind::Rotation: return power("C");
    case OpKind::ImproperRotation: return power("S");
  }
  return "?";
}

SymmetryOpClass classify_operation(const Matrix& tau, int dim, double tol) {
  if (dim < 1 || tau.rows() != static_cast<std::size_t>(dim) || tau.cols() != tau.rows())
    throw Error(ErrorCode::DimensionMismatch, "classify_operation needs a d x d matrix");
  SymmetryOpClass out;
  out.order = matrix_order(tau, tol);
  out.fixed_space = eigenspace(tau, 1, tol);
  out.negated_space = eigenspace(tau, -1, tol);
  const auto d = static_cast<std::size_t>(dim);
  if (out.order == 1) return out;
  const double det = determinant(tau, tol).to_double();
  const double tr = trace(tau).to_double();
  Matrix minus = tau;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) minus(i, j) = -minus(i, j);
  const bool neg_identity = is_identity(minus, tol);
  if (dim == 2 || dim >= 4 || dim == 1) {
    if (neg_identity && dim != 2) {
      out.kind = dim == 1 ? OpKind::Reflection : OpKind::Inversion;
      out.n = 2;
      out.k = 1;
      return out;
    }
    if (det < 0) {
      if (out.fixed_space.size() != d - 1)
        throw Error(ErrorCode::Unsupported, "orientation-reversing operation is not a reflection");
      out.kind = OpKind::Reflection;
      out.n = 2;
      out.k = 1;
      return out;
    }
    if (out.fixed_space.size() != d - 2)
      throw Error(ErrorCode::Unsupported, "operation is not a rotation in a single plane");
    out.kind = OpKind::Rotation;
    std::tie(out.n, out.k) = angle_fraction((tr - static_cast<double>(d - 2)) / 2.0, out.order, tol);
    return out;
  }
  // dim == 3
  if (neg_identity) {
    out.kind = OpKind::Inversion;
    out.n = 2;
    out.k = 1;
    return out;
  }
  if (det > 0) {
    out.kind = OpKind::Rotation;
    std::tie(out.n, out.k) = angle_fraction((tr - 1.0) / 2.0, out.order, tol);
    return out;
  }
  if (out.fixed_space.size() == 2) {
    out.kind = OpKind::Reflection;
    out.n = 2;
    out.k = 1;
    return out;
  }
  out.kind = OpKind::ImproperRotation;
  std::tie(out.n, out.k) = angle_fraction((tr + 1.0) / 2.0, out.order, tol);
  return out;
}

std::pair<Real, Real> table_entries(const SymmetryOpClass& op, int dim, std::size_t v_fixed) {
  const Real v(static_cast<long>(v_fixed));
  Real t;
  switch (op.kind) {
    case OpKind::Identity: t = dim; break;
    case OpKind::Reflection: t = dim - 2; break;
    case OpKind::Inversion: t = -dim; break;
    case OpKind::Rotation: t = two_cos(op.n, op.k) + Real(dim - 2); break;
    case OpKind::ImproperRotation: t = two_cos(op.n, op.k) - Real(dim - 2); break;
  }
  return {t * v, t};
}

std::vector<CharacterRow> character_table(const Framework& fw, const GroupAction& action, double tol) {
  if (!fw.norm().has_finite_isometry_group())
    throw Error(ErrorCode::Unsupported, "characters of the trivial-flex part need a finite isometry group");
  std::vector<CharacterRow> rows;
  for (std::size_t g = 0; g < action.order(); ++g) {
    CharacterRow row;
    row.element = action.element_name(g);
    row.op = classify_operation(action.tau(g), action.dim(), tol);
    auto fixed = fixed_elements(fw.graph(), action, g);
    row.v_fixed = fixed.vertices.size();
    row.e_fixed = fixed.edges.size();
    long pv = 0;
    for (std::size_t v = 0; v < action.vertex_count(); ++v) pv += action.image(g, v) == v ? 1 : 0;
    row.chi_pv = pv;
    row.chi_pe = static_cast<long>(row.e_fixed);
    row.trace = trace(action.tau(g));
    row.chi_tau_pv = row.trace * Real(pv);
    row.chi_trivial = row.trace;
    auto [tpv, tt] = table_entries(row.op, action.dim(), row.v_fixed);
    row.matches_table = near(tpv, row.chi_tau_pv, 1e-7) && near(tt, row.chi_trivial, 1e-7);
    rows.push_back(std::move(row));
  }
  return rows;
}

double intertwining_check(const Framework& fw, const GroupAction& action, double tol) {
  auto rm = rigidity_matrix(fw, tol);
  const auto& g = fw.graph();
  const auto d = static_cast<std::size_t>(fw.dim());
  double worst = 0.0;
  for (std::size_t el = 0; el < action.order(); ++el) {
    const Matrix& tau = action.tau(el);
    for (std::size_t r = 0; r < g.edge_count(); ++r) {
      const Edge e = g.edges()[r];
      // row e of R (tau x P_V)(g): block v holds (row e, block g v) tau
      // row e of P_E(g) R: row of the edge g^{-1} e
      const Edge pre = action.image(action.inverse(el), e);
      const auto src = *g.edge_index(pre.u, pre.v);
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto gv = action.image(el, v);
        Vector block(d);
        for (std::size_t i = 0; i < d; ++i) block[i] = rm.matrix(r, gv * d + i);
        Vector lhs = block * tau;
        for (std::size_t i = 0; i < d; ++i) {
          Real diff = lhs[i] - rm.matrix(src, v * d + i);
          worst = std::max(worst, std::abs(diff.to_double()));
        }
      }
    }
  }
  return worst;
}

bool RuleReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const RuleCheck& c) { return c.pass; });
}

RuleReport symmetric_count_check(const Graph& graph, const GroupAction& action, double tol) {
  RuleReport out;
  const int d = action.dim();
  for (std::size_t g = 0; g < action.order(); ++g) {
    auto op = classify_operation(action.tau(g), d, tol);
    auto fixed = fixed_elements(graph, action, g);
    const std::size_t V = fixed.vertices.size();
    const std::size_t E = fixed.edges.size();
    auto add = [&](const std::string& rule, const std::string& statement, bool pass) {
      out.checks.push_back({action.element_name(g), op.symbol(), rule, statement, pass, V, E});
    };
    const Real tr = trace(action.tau(g));
    const Real rhs = tr * (Real(static_cast<long>(V)) - Real(1));
    add("fixed-count", "|E_g| = tr(tau(g)) (|V_g| - 1)", near(Real(static_cast<long>(E)), rhs, 1e-7));
    auto either = [&](std::size_t v0, std::size_t e0, std::size_t v1, std::size_t e1) {
      return (V == v0 && E == e0) || (V == v1 && E == e1);
    };
    auto pair_text = [](std::size_t v0, std::size_t e0, std::size_t v1, std::size_t e1) {
      return "(|V_g|, |E_g|) is (" + std::to_string(v0) + "," + std::to_string(e0) + ") or (" +
             std::to_string(v1) + "," + std::to_string(e1) + ")";
    };
    const bool one_iff = V >= 1 && ((V == 1) == (E == 0));
    const char* iff_text = "|V_g| >= 1 and (|V_g| = 1 iff |E_g| = 0)";
    switch (op.kind) {
      case OpKind::Identity: break;
      case OpKind::Reflection:
        if (d == 2) add("reflection", "|E_s| = 0", E == 0);
        else if (d >= 3) add("reflection", iff_text, one_iff);
        break;
      case OpKind::Inversion:
        add("inversion", pair_text(0, static_cast<std::size_t>(d), 1, 0),
            either(0, static_cast<std::size_t>(d), 1, 0));
        break;
      case OpKind::Rotation:
        switch (op.n) {
          case 2:
            if (d == 2) add("half-turn", pair_text(0, 2, 1, 0), either(0, 2, 1, 0));
            else if (d == 3) add("half-turn", pair_text(0, 1, 1, 0), either(0, 1, 1, 0));
            else if (d == 4) add("half-turn", "|E_2| = 0", E == 0);
            else add("half-turn", iff_text, one_iff);
            break;
          case 3:
            if (d == 2) add("three-fold", pair_text(0, 1, 1, 0), either(0, 1, 1, 0));
            else if (d == 3) add("three-fold", "|E_3| = 0", E == 0);
            else add("three-fold", iff_text, one_iff);
            break;
          case 4:
            if (d == 2) add("four-fold", "|V_4| <= 1 and |E_4| = 0", V <= 1 && E == 0);
            else if (d <= 4) add("four-fold", "|V_4| = 1 and |E_4| = 0", V == 1 && E == 0);
            else add("four-fold", iff_text, one_iff);
            break;
          case 6:
            if (d <= 3) add("six-fold", "|V_6| = 1 and |E_6| = 0", V == 1 && E == 0);
            else add("six-fold", iff_text, one_iff);
            break;
          default:
            add("n-fold", "|V_n| = 1 and |E_n| = 0", V == 1 && E == 0);
        }
        break;
      case OpKind::ImproperRotation:
        if (d != 3) break;
        switch (op.n) {
          case 4: add("improper", pair_text(0, 1, 1, 0), either(0, 1, 1, 0)); break;
          case 6: add("improper", "|E_S6| = 0", E == 0); break;
          default: add("improper", "|V_Sn| = 1 and |E_Sn| = 0", V == 1 && E == 0);
        }
        break;
    }
  }
  return out;
}

RuleReport symmetric_count_check(const Framework& fw, const GroupAction& action, double tol) {
  if (!fw.norm().has_finite_isometry_group())
    throw Error(ErrorCode::Unsupported, "fixed-count rules need a finite isometry group");
  return symmetric_count_check(fw.graph(), action, tol);
}

RuleReport character_equation_check(const Framework& fw, const GroupAction& action, double tol) {
  RuleReport out;
  for (const auto& row : character_table(fw, action, tol)) {
    Real rhs = row.chi_tau_pv - row.chi_trivial;
    bool pass = near(Real(row.chi_pe), rhs, 1e-7);
    out.checks.push_back({row.element, row.op.symbol(), "character",
                          "chi(P_E) = chi(tau x P_V) - chi(T): " + std::to_string(row.chi_pe) + " vs " +
                              rhs.str(),
                          pass, row.v_fixed, row.e_fixed});
  }
  return out;
}

}  // namespace normrig

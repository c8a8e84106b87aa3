#include "normrig/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>

#include "normrig/error.hpp"
#include "normrig/linalg.hpp"

namespace normrig {

namespace {

void require_dim(int dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidInput, "norm dimension must be positive");
}

void require_length(const NormSpec& norm, const Vector& x) {
  if (x.size() != static_cast<std::size_t>(norm.dim()))
    throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(x.size()) +
                                                  " does not match norm dimension " +
                                                  std::to_string(norm.dim()));
}

bool matrix_exact(const std::vector<Vector>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const Vector& v) { return all_exact(v); });
}

double lq_exponent(const NormSpec& norm) { return norm.q().to_double(); }

}  // namespace

NormSpec NormSpec::euclidean(int dim) {
  require_dim(dim);
  return NormSpec(dim, NormKind::Euclidean, NormSource::L2);
}

NormSpec NormSpec::lq(int dim, const Real& q) {
  require_dim(dim);
  if (!q.is_exact()) throw Error(ErrorCode::InvalidInput, "l_q exponent must be rational");
  if (q < Real(1)) throw Error(ErrorCode::InvalidInput, "l_q exponent must be >= 1");
  if (q == Real(1)) {
    NormSpec n = l1(dim);
    n.source_ = NormSource::LQ;
    return n;
  }
  NormSpec n(dim, q == Real(2) ? NormKind::Euclidean : NormKind::LQ, NormSource::LQ);
  n.q_ = q;
  return n;
}

NormSpec NormSpec::l1(int dim) {
  require_dim(dim);
  if (dim > 12) throw Error(ErrorCode::Unsupported, "l1 facet lowering limited to d <= 12");
  std::vector<Covector> facets;
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    Covector f(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) f[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
    facets.push_back(std::move(f));
  }
  NormSpec n = polyhedral(dim, std::move(facets));
  n.source_ = NormSource::L1;
  n.q_ = 1;
  return n;
}

NormSpec NormSpec::linf(int dim) {
  require_dim(dim);
  std::vector<Covector> facets;
  for (int i = 0; i < dim; ++i)
    for (int s : {1, -1}) {
      Covector f(static_cast<std::size_t>(dim));
      f[static_cast<std::size_t>(i)] = s;
      facets.push_back(std::move(f));
    }
  NormSpec n = polyhedral(dim, std::move(facets));
  n.source_ = NormSource::LInf;
  return n;
}

NormSpec NormSpec::polyhedral(int dim, std::vector<Covector> facets) {
  require_dim(dim);
  if (facets.size() < 2 * static_cast<std::size_t>(dim))
    throw Error(ErrorCode::InvalidInput, "a polyhedral norm needs at least 2d facet covectors");
  for (const auto& f : facets)
    if (f.size() != static_cast<std::size_t>(dim))
      throw Error(ErrorCode::DimensionMismatch, "facet covector has wrong length");
  NormSpec n(dim, NormKind::Polyhedral, NormSource::Polyhedral);
  n.facets_ = std::move(facets);
  n.index_facet_pairs(kDefaultTolerance);

  Matrix fm = Matrix::from_rows(n.facets_);
  auto ctx = resolve_context(fm.all_exact(), std::nullopt);
  if (rank(fm, ctx) != static_cast<std::size_t>(dim))
    throw Error(ErrorCode::InvalidInput, "facet covectors do not span: unit ball is unbounded");
  return n;
}

void NormSpec::index_facet_pairs(double tol) {
  const std::size_t n = facets_.size();
  facet_pair_.assign(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero_vector(facets_[i], tol)) throw Error(ErrorCode::InvalidInput, "zero facet covector");
    for (std::size_t j = 0; j < i; ++j)
      if (near(facets_[i], facets_[j], tol)) throw Error(ErrorCode::InvalidInput, "duplicate facet covector");
    if (facet_pair_[i] >= 0) continue;
    Covector neg = -facets_[i];
    bool found = false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (facet_pair_[j] < 0 && near(facets_[j], neg, tol)) {
        facet_pair_[i] = facet_pair_[j] = next++;
        found = true;
        break;
      }
    }
    if (!found)
      throw Error(ErrorCode::InvalidInput,
                  "facet covectors must come in +/- pairs (unit ball not centrally symmetric)");
  }
}

NormSpec NormSpec::from_ball_vertices(int dim, const std::vector<Vector>& vertices) {
  require_dim(dim);
  if (dim > 3) throw Error(ErrorCode::Unsupported, "ball-vertex conversion supports d <= 3");
  const double tol = kDefaultTolerance;
  for (const auto& v : vertices)
    if (v.size() != static_cast<std::size_t>(dim))
      throw Error(ErrorCode::DimensionMismatch, "ball vertex has wrong length");
  for (const auto& v : vertices) {
    bool has_neg = std::any_of(vertices.begin(), vertices.end(),
                               [&](const Vector& w) { return near(w, -v, tol); });
    if (!has_neg) throw Error(ErrorCode::InvalidInput, "ball vertices must be centrally symmetric");
  }

  // A facet is the hyperplane f(x) = 1 through d vertices that leaves every
  // vertex on the side f(x) <= 1.
  const std::size_t n = vertices.size();
  std::vector<Covector> facets;
  std::vector<std::size_t> pick(static_cast<std::size_t>(dim));
  auto consider = [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> rows;
    for (auto i : idx) rows.push_back(vertices[i]);
    Matrix a = Matrix::from_rows(rows);
    if (near_zero(determinant(a, tol), tol)) return;
    Matrix ainv = inverse(a, tol);
    Vector ones(static_cast<std::size_t>(dim), Real(1));
    Covector f = ainv * ones;
    for (const auto& v : vertices)
      if (dot(f, v) > Real(1) && !near(dot(f, v), Real(1), tol)) return;
    for (const auto& g : facets)
      if (near(f, g, tol)) return;
    facets.push_back(std::move(f));
  };
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == pick.size()) {
      consider(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  NormSpec result = polyhedral(dim, std::move(facets));
  result.ball_vertices_ = vertices;
  return result;
}

NormSpec NormSpec::hexagonal_prism() {
  // Side facets have outward normals at 30 + 60k degrees and lie at distance
  // cos(30) from the axis; top and bottom are z = +-1.
  std::vector<Covector> facets;
  facets.push_back({Real(0), Real(0), Real(1)});
  facets.push_back({Real(0), Real(0), Real(-1)});
  const double scale = 2.0 / std::sqrt(3.0);
  for (int k = 0; k < 3; ++k) {
    double a = std::numbers::pi / 6 + k * std::numbers::pi / 3;
    double cx = std::cos(a) * scale;
    double cy = std::sin(a) * scale;
    // x-components of the 90-degree normal are exactly zero.
    Real rx = std::fabs(cx) < 1e-15 ? Real(0) : Real::inexact(cx);
    facets.push_back({rx, Real::inexact(cy), Real(0)});
    facets.push_back({-rx, Real::inexact(-cy), Real(0)});
  }
  return polyhedral(3, std::move(facets));
}

bool NormSpec::exact_data() const {
  if (kind_ == NormKind::Polyhedral) return matrix_exact(facets_);
  return true;
}

std::string NormSpec::describe() const {
  std::ostringstream os;
  switch (source_) {
    case NormSource::L2: os << "l2"; break;
    case NormSource::L1: os << "l1"; break;
    case NormSource::LInf: os << "linf"; break;
    case NormSource::LQ: os << "l" << q_.str(); break;
    case NormSource::Polyhedral: os << "polyhedral(" << facets_.size() << " facets)"; break;
  }
  os << " on R^" << dim_;
  return os.str();
}

Real evaluate(const NormSpec& norm, const Vector& x) {
  require_length(norm, x);
  switch (norm.kind()) {
    case NormKind::Euclidean:
      return sqrt(dot(x, x));
    case NormKind::LQ: {
      const double q = lq_exponent(norm);
      double s = 0;
      for (const auto& xi : x) s += std::pow(std::fabs(xi.to_double()), q);
      return Real::inexact(std::pow(s, 1.0 / q));
    }
    case NormKind::Polyhedral: {
      Real best = dot(norm.facets().front(), x);
      for (const auto& f : norm.facets()) {
        Real v = dot(f, x);
        if (v > best) best = v;
      }
      return best;
    }
  }
  return {};
}

std::vector<std::size_t> active_facets(const NormSpec& norm, const Vector& x, double tol) {
  require_length(norm, x);
  if (norm.kind() != NormKind::Polyhedral)
    throw Error(ErrorCode::InvalidInput, "active facets are defined for polyhedral norms only");
  std::vector<Real> values;
  values.reserve(norm.facets().size());
  for (const auto& f : norm.facets()) values.push_back(dot(f, x));
  Real best = *std::max_element(values.begin(), values.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (near(values[i], best, tol)) out.push_back(i);
  return out;
}

namespace {

// Gradient of the smooth l_q norm at x != 0.
Covector lq_gradient(const NormSpec& norm, const Vector& x) {
  const double q = lq_exponent(norm);
  const double nx = evaluate(norm, x).to_double();
  Covector g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double xi = x[i].to_double();
    double s = (xi > 0) - (xi < 0);
    g[i] = Real::inexact(s * std::pow(std::fabs(xi) / nx, q - 1));
  }
  return g;
}

}  // namespace

Real one_sided_derivative(const NormSpec& norm, const Vector& x, const Vector& y, Side side,
                          double tol) {
  require_length(norm, x);
  require_length(norm, y);
  if (is_zero_vector(x, 0.0)) throw Error(ErrorCode::ZeroVector, "directional derivative at x = 0");
  switch (norm.kind()) {
    case NormKind::Euclidean:
      return dot(x, y) / evaluate(norm, x);
    case NormKind::LQ:
      return dot(lq_gradient(norm, x), y);
    case NormKind::Polyhedral: {
      auto act = active_facets(norm, x, tol);
      Real best = dot(norm.facets()[act.front()], y);
      for (auto i : act) {
        Real v = dot(norm.facets()[i], y);
        if (side == Side::Plus ? v > best : v < best) best = v;
      }
      return best;
    }
  }
  return {};
}

std::optional<Covector> support_functional(const NormSpec& norm, const Vector& x, double tol) {
  require_length(norm, x);
  if (is_zero_vector(x, 0.0)) throw Error(ErrorCode::ZeroVector, "support functional at x = 0");
  switch (norm.kind()) {
    case NormKind::Euclidean: {
      Real n = evaluate(norm, x);
      Covector f(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) f[i] = x[i] / n;
      return f;
    }
    case NormKind::LQ:
      return lq_gradient(norm, x);
    case NormKind::Polyhedral: {
      auto act = active_facets(norm, x, tol);
      if (act.size() != 1) return std::nullopt;
      return norm.facets()[act.front()];
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> find_facet(const NormSpec& norm, const Covector& f, double tol) {
  for (std::size_t i = 0; i < norm.facets().size(); ++i)
    if (near(norm.facets()[i], f, tol)) return i;
  return std::nullopt;
}

namespace {

std::vector<Matrix> signed_permutations(int dim) {
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Matrix> out;
  do {
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
      Matrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
      for (int i = 0; i < dim; ++i)
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])) =
            (mask >> i) & 1u ? -1 : 1;
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Does f -> f M permute the facet set?
bool permutes_facets(const NormSpec& norm, const Matrix& m, double tol) {
  const auto& facets = norm.facets();
  std::vector<bool> hit(facets.size(), false);
  for (const auto& f : facets) {
    auto j = find_facet(norm, f * m, tol);
    if (!j || hit[*j]) return false;
    hit[*j] = true;
  }
  return true;
}

std::vector<Matrix> polyhedral_isometries(const NormSpec& norm, double tol) {
  const auto& facets = norm.facets();
  const std::size_t d = static_cast<std::size_t>(norm.dim());
  if (d > 3 || facets.size() > 60)
    throw Error(ErrorCode::Unsupported,
                "isometry-group search is limited to d <= 3 and at most 60 facets");

  // Greedily pick d independent facets as the spanning tuple.
  std::vector<std::size_t> basis;
  auto ctx = resolve_context(norm.exact_data(), std::nullopt, tol);
  for (std::size_t i = 0; i < facets.size() && basis.size() < d; ++i) {
    std::vector<Vector> rows;
    for (auto b : basis) rows.push_back(facets[b]);
    rows.push_back(facets[i]);
    if (rank(Matrix::from_rows(rows), ctx) == rows.size()) basis.push_back(i);
  }
  std::vector<Vector> brows;
  for (auto b : basis) brows.push_back(facets[b]);
  const Matrix binv = inverse(Matrix::from_rows(brows), tol);

  // An isometry M satisfies B M = G for the images G of the basis rows, so
  // M = B^{-1} G; keep those that permute all facets.
  std::vector<Matrix> out;
  std::vector<std::size_t> image(d);
  std::vector<bool> used(facets.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == d) {
      std::vector<Vector> grows;
      for (auto g : image) grows.push_back(facets[g]);
      Matrix m = binv * Matrix::from_rows(grows);
      if (permutes_facets(norm, m, tol)) out.push_back(std::move(m));
      return;
    }
    for (std::size_t g = 0; g < facets.size(); ++g) {
      if (used[g]) continue;
      used[g] = true;
      image[k] = g;
      rec(k + 1);
      used[g] = false;
    }
  };
  rec(0);
  // Identity first, the rest in discovery order.
  auto it = std::find_if(out.begin(), out.end(), [&](const Matrix& m) { return is_identity(m, tol); });
  if (it != out.end()) std::rotate(out.begin(), it, it + 1);
  return out;
}

}  // namespace

IsometryGroup linear_isometry_group(const NormSpec& norm, double tol) {
  switch (norm.kind()) {
    case NormKind::Euclidean:
      return {false, {}};
    case NormKind::LQ:
      if (norm.dim() > 6) throw Error(ErrorCode::Unsupported, "signed-permutation group limited to d <= 6");
      return {true, signed_permutations(norm.dim())};
    case NormKind::Polyhedral:
      return {true, polyhedral_isometries(norm, tol)};
  }
  return {};
}

bool is_isometry(const NormSpec& norm, const Matrix& m, double tol) {
  const auto d = static_cast<std::size_t>(norm.dim());
  if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::DimensionMismatch, "matrix size does not match norm");
  if (near_zero(determinant(m, tol), tol)) throw Error(ErrorCode::Singular, "isometry test on a singular matrix");
  switch (norm.kind()) {
    case NormKind::Euclidean:
      return is_identity(m.transpose() * m, tol);
    case NormKind::LQ:
      for (std::size_t i = 0; i < d; ++i) {
        std::size_t row_nz = 0;
        std::size_t col_nz = 0;
        for (std::size_t j = 0; j < d; ++j) {
          for (auto [a, count] : {std::pair{m(i, j), &row_nz}, std::pair{m(j, i), &col_nz}}) {
            if (near_zero(a, tol)) continue;
            if (!near(a.abs(), Real(1), tol)) return false;
            ++*count;
          }
        }
        if (row_nz != 1 || col_nz != 1) return false;
      }
      return true;
    case NormKind::Polyhedral:
      return permutes_facets(norm, m, tol);
  }
  return false;
}

}  // namespace normrig

#include "normrig/linalg.hpp"

#include <Eigen/SVD>

#include <algorithm>

#include "normrig/error.hpp"

namespace normrig {

const char* to_string(Backend b) { return b == Backend::Exact ? "exact" : "float"; }

ScalarContext resolve_context(bool data_exact, std::optional<Backend> requested, double tolerance) {
  if (!(tolerance > 0)) throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
  if (requested == Backend::Exact && !data_exact)
    throw Error(ErrorCode::InvalidInput,
                "exact backend requested but the input contains non-rational values");
  Backend b = requested.value_or(data_exact ? Backend::Exact : Backend::Float);
  return {b, tolerance};
}

namespace {

// Row echelon form over the integers. Each row is first scaled by the lcm of
// its denominators; elimination then uses the Bareiss update so every
// intermediate entry is a minor of the scaled matrix and divisions are exact.
struct IntegerEchelon {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<std::size_t> pivot_cols;
};

IntegerEchelon bareiss_echelon(const Matrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < nc; ++j) {
      const mpq_class& q = m(i, j).rational();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < nc; ++j) {
      const mpq_class& q = m(i, j).rational();
      a[i][j] = q.get_num() * (l / q.get_den());
    }
  }

  IntegerEchelon out;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    const mpz_class pivot = a[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        mpz_class t = pivot * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

RankNullspace exact_rank_nullspace(const Matrix& m) {
  if (!m.all_exact())
    throw Error(ErrorCode::InvalidInput, "exact backend requires rational matrix entries");
  const std::size_t nc = m.cols();
  RankNullspace result;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < nc; ++j) {
      Vector e(nc);
      e[j] = 1;
      result.kernel.push_back(std::move(e));
    }
    return result;
  }
  IntegerEchelon ech = bareiss_echelon(m);
  result.rank = ech.pivot_cols.size();

  std::vector<bool> is_pivot(nc, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  // Back-substitute one kernel vector per free column.
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> x(nc);
    x[free] = 1;
    for (std::size_t k = result.rank; k-- > 0;) {
      const std::size_t pc = ech.pivot_cols[k];
      mpq_class s = 0;
      for (std::size_t j = pc + 1; j < nc; ++j)
        if (sgn(x[j]) != 0 && ech.rows[k][j] != 0) s += mpq_class(ech.rows[k][j]) * x[j];
      x[pc] = -s / mpq_class(ech.rows[k][pc]);
    }
    Vector v;
    v.reserve(nc);
    for (auto& q : x) v.emplace_back(q);
    result.kernel.push_back(std::move(v));
  }
  return result;
}

RankNullspace float_rank_nullspace(const Matrix& m, double tol) {
  const auto nr = static_cast<Eigen::Index>(m.rows());
  const auto nc = static_cast<Eigen::Index>(m.cols());
  RankNullspace result;
  if (nr == 0 || nc == 0) {
    for (Eigen::Index j = 0; j < nc; ++j) {
      Vector e(static_cast<std::size_t>(nc), Real::inexact(0.0));
      e[static_cast<std::size_t>(j)] = Real::inexact(1.0);
      result.kernel.push_back(std::move(e));
    }
    return result;
  }
  Eigen::MatrixXd a(nr, nc);
  for (Eigen::Index i = 0; i < nr; ++i)
    for (Eigen::Index j = 0; j < nc; ++j)
      a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  std::size_t r = 0;
  if (smax > 0)
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > tol * smax) ++r;
  result.rank = r;
  const Eigen::MatrixXd& v = svd.matrixV();
  for (Eigen::Index j = static_cast<Eigen::Index>(r); j < nc; ++j) {
    Vector k(static_cast<std::size_t>(nc));
    for (Eigen::Index i = 0; i < nc; ++i) k[static_cast<std::size_t>(i)] = Real::inexact(v(i, j));
    result.kernel.push_back(std::move(k));
  }
  return result;
}

}  // namespace

RankNullspace rank_nullspace(const Matrix& m, const ScalarContext& ctx) {
  return ctx.backend == Backend::Exact ? exact_rank_nullspace(m)
                                       : float_rank_nullspace(m, ctx.tolerance);
}

std::size_t rank(const Matrix& m, const ScalarContext& ctx) {
  if (ctx.backend == Backend::Exact) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (!m.all_exact())
      throw Error(ErrorCode::InvalidInput, "exact backend requires rational matrix entries");
    return bareiss_echelon(m).pivot_cols.size();
  }
  return float_rank_nullspace(m, ctx.tolerance).rank;
}

bool rows_independent(const Matrix& m, const ScalarContext& ctx) { return rank(m, ctx) == m.rows(); }

}  // namespace normrig

#include "normrig/matrix.hpp"

#include <cmath>
#include <utility>

#include "normrig/error.hpp"

namespace normrig {

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    m.set_row(i, rows[i]);
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "set_row: length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

bool Matrix::all_exact() const {
  for (const auto& x : data_)
    if (!x.is_exact()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::max_abs() const { return normrig::max_abs(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Real& aik = a(i, k);
      if (aik.is_exact() && aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference: shape mismatch");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector: shape mismatch");
  Vector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

Vector operator*(const Vector& row, const Matrix& m) {
  if (row.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "covector-matrix: shape mismatch");
  Vector r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) r[j] += row[i] * m(i, j);
  return r;
}

namespace {

// Gauss-Jordan with partial pivoting; exact entries pivot on any nonzero.
std::size_t pick_pivot(const Matrix& a, std::size_t col, std::size_t from, double tol) {
  std::size_t best = a.rows();
  double best_mag = 0;
  for (std::size_t i = from; i < a.rows(); ++i) {
    const Real& x = a(i, col);
    if (x.is_exact()) {
      if (!x.is_zero()) {
        double mag = std::fabs(x.to_double());
        if (best == a.rows() || mag > best_mag) {
          best = i;
          best_mag = mag;
        }
      }
    } else if (std::fabs(x.to_double()) > tol && std::fabs(x.to_double()) > best_mag) {
      best = i;
      best_mag = std::fabs(x.to_double());
    }
  }
  return best;
}

}  // namespace

Matrix inverse(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = pick_pivot(a, c, c, tol);
    if (p == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Real pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      Real f = a(i, c);
      if (f.is_exact() && f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Real determinant(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Real det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = pick_pivot(a, c, c, tol);
    if (p == n) return a.all_exact() ? Real(0) : Real::inexact(0.0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      Real f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Real trace(const Matrix& m) {
  Real t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

bool near(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!near(a(i, j), b(i, j), tol)) return false;
  return true;
}

bool is_identity(const Matrix& m, double tol) {
  return m.rows() == m.cols() && near(m, Matrix::identity(m.rows()), tol);
}

}  // namespace normrig

#pragma once

#include <cstddef>
#include <vector>

#include "normrig/real.hpp"

namespace normrig {

/// Dense row-major matrix of Real scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Real& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  void set_row(std::size_t i, const Vector& v);

  bool all_exact() const;
  Matrix transpose() const;
  double max_abs() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Real> data_;
};

/// Row vector times matrix (covector pull-back f -> f M).
Vector operator*(const Vector& row, const Matrix& m);

Matrix inverse(const Matrix& m, double tol = kDefaultTolerance);
Real determinant(const Matrix& m, double tol = kDefaultTolerance);
Real trace(const Matrix& m);
bool near(const Matrix& a, const Matrix& b, double tol = kDefaultTolerance);
bool is_identity(const Matrix& m, double tol = kDefaultTolerance);

}  // namespace normrig

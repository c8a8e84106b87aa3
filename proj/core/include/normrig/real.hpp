#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace normrig {

inline constexpr double kDefaultTolerance = 1e-9;

/// A scalar that is either an exact rational or a double.
///
/// Arithmetic between two exact values stays exact; as soon as an inexact
/// operand is involved the result is a double. This lets one code path serve
/// both the rational backend (integer/rational placements, polyhedral norms
/// with rational facets) and the floating backend (l_q norms, irrational
/// facets such as the hexagonal prism).
class Real {
 public:
  Real() : value_(mpq_class(0)) {}
  Real(int v) : value_(mpq_class(v)) {}   // NOLINT(google-explicit-constructor)
  Real(long v) : value_(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Real(mpq_class q);
  Real(long num, long den);

  static Real inexact(double d) { return Real(Tag{}, d); }

  /// Parses "3", "-1/4", "0.25", "1e-3" exactly (decimal notation is exact).
  static Real parse(std::string_view text);

  bool is_exact() const noexcept { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const;
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Real abs() const;

  /// Exact rendering "p/q" for rationals, shortest round-trip decimal otherwise.
  std::string str() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }

  friend bool operator==(const Real& a, const Real& b);
  friend bool operator<(const Real& a, const Real& b);
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }

 private:
  struct Tag {};
  Real(Tag, double d) : value_(d) {}

  std::variant<mpq_class, double> value_;
};

using Vector = std::vector<Real>;

/// |a - b| <= tol * max(1, |a|, |b|); exact equality when both are exact.
bool near(const Real& a, const Real& b, double tol = kDefaultTolerance);
bool near_zero(const Real& a, double tol = kDefaultTolerance);

/// Square root, exact when the argument is the square of a rational.
Real sqrt(const Real& x);
std::optional<mpq_class> exact_sqrt(const mpq_class& q);

Real dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Real& s, const Vector& v);
bool all_exact(const Vector& v);
bool near(const Vector& a, const Vector& b, double tol = kDefaultTolerance);
bool is_zero_vector(const Vector& v, double tol = kDefaultTolerance);
double max_abs(const Vector& v);
std::vector<double> to_doubles(const Vector& v);
Vector from_doubles(const std::vector<double>& v);

}  // namespace normrig

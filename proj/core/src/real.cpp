#include "normrig/real.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "normrig/error.hpp"

namespace normrig {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid input";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::ZeroVector: return "zero vector";
    case ErrorCode::Singular: return "singular matrix";
    case ErrorCode::NotWellPositioned: return "not well-positioned";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::SizeCap: return "size cap exceeded";
    case ErrorCode::NotFiniteOrder: return "not of finite order";
  }
  return "unknown";
}

Real::Real(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

Real::Real(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  value_ = std::move(q);
}

namespace {

Real parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw Error(ErrorCode::InvalidInput, "not a number: '" + std::string(text) + "'");
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    auto rest = text.substr(i);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
    if (ec != std::errc() || ptr != rest.data() + rest.size())
      throw Error(ErrorCode::InvalidInput, "bad exponent in '" + std::string(text) + "'");
    i = text.size();
  }
  if (i != text.size()) throw Error(ErrorCode::InvalidInput, "not a number: '" + std::string(text) + "'");
  long power = exponent - scale;
  if (std::labs(power) > 4000) throw Error(ErrorCode::InvalidInput, "exponent out of range");
  mpz_class num(digits, 10);
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(power)));
  mpq_class q = power >= 0 ? mpq_class(num * ten_pow) : mpq_class(num, ten_pow);
  q.canonicalize();
  if (negative) q = -q;
  return Real(q);
}

}  // namespace

Real Real::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::InvalidInput, "empty number");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  Real num = parse_decimal(text.substr(0, slash));
  Real den = parse_decimal(text.substr(slash + 1));
  if (den.is_zero()) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return num / den;
}

const mpq_class& Real::rational() const {
  if (!is_exact()) throw Error(ErrorCode::InvalidInput, "value is not an exact rational");
  return std::get<mpq_class>(value_);
}

double Real::to_double() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_d();
  return std::get<double>(value_);
}

int Real::sign() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_));
  double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

Real Real::abs() const { return sign() < 0 ? -*this : *this; }

std::string Real::str() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_str();
  char buf[64];
  double d = std::get<double>(value_);
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, ptr);
}

#define NORMRIG_REAL_COMPOUND(OP)                                              \
  Real& Real::operator OP##=(const Real& o) {                                  \
    if (is_exact() && o.is_exact()) {                                          \
      std::get<mpq_class>(value_) OP##= std::get<mpq_class>(o.value_);          \
    } else {                                                                   \
      value_ = to_double() OP o.to_double();                                   \
    }                                                                          \
    return *this;                                                              \
  }

NORMRIG_REAL_COMPOUND(+)
NORMRIG_REAL_COMPOUND(-)
NORMRIG_REAL_COMPOUND(*)
#undef NORMRIG_REAL_COMPOUND

Real& Real::operator/=(const Real& o) {
  if (o.is_exact() && o.is_zero()) throw Error(ErrorCode::Singular, "division by zero");
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
  } else {
    value_ = to_double() / o.to_double();
  }
  return *this;
}

Real Real::operator-() const {
  if (is_exact()) return Real(mpq_class(-std::get<mpq_class>(value_)));
  return inexact(-std::get<double>(value_));
}

bool operator==(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

bool operator<(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() < b.rational();
  return a.to_double() < b.to_double();
}

bool near(const Real& a, const Real& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  double x = a.to_double();
  double y = b.to_double();
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= tol * scale;
}

bool near_zero(const Real& a, double tol) {
  if (a.is_exact()) return a.is_zero();
  return std::fabs(a.to_double()) <= tol;
}

std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw Error(ErrorCode::InvalidInput, "square root of a negative value");
  if (x.is_exact()) {
    if (auto r = exact_sqrt(x.rational())) return Real(*r);
  }
  return Real::inexact(std::sqrt(x.to_double()));
}

Real dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot: length mismatch");
  Real s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector add: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sub: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Real& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool all_exact(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Real& x) { return x.is_exact(); });
}

bool near(const Vector& a, const Vector& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!near(a[i], b[i], tol)) return false;
  return true;
}

bool is_zero_vector(const Vector& v, double tol) {
  return std::all_of(v.begin(), v.end(), [tol](const Real& x) { return near_zero(x, tol); });
}

double max_abs(const Vector& v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, std::fabs(x.to_double()));
  return m;
}

std::vector<double> to_doubles(const Vector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

Vector from_doubles(const std::vector<double>& v) {
  Vector out;
  out.reserve(v.size());
  for (double x : v) out.push_back(Real::inexact(x));
  return out;
}

}  // namespace normrig

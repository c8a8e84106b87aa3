#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "normrig/matrix.hpp"
#include "normrig/real.hpp"

namespace normrig {

/// How the norm is evaluated internally. l1 and l-infinity are lowered to
/// Polyhedral (cross-polytope / hypercube facets); l2 is Euclidean.
enum class NormKind { Euclidean, LQ, Polyhedral };

/// How the norm was specified, kept so documents round-trip.
enum class NormSource { L2, L1, LInf, LQ, Polyhedral };

using Covector = Vector;

/// A norm on R^d.
class NormSpec {
 public:
  static NormSpec euclidean(int dim);
  /// q >= 1 rational; q == 1 lowers to l1, q == 2 to Euclidean.
  static NormSpec lq(int dim, const Real& q);
  static NormSpec l1(int dim);
  static NormSpec linf(int dim);
  /// Facet covectors (functionals equal to 1 on each facet of the unit ball).
  /// They must come in +/- pairs and span R^d.
  static NormSpec polyhedral(int dim, std::vector<Covector> facets);
  /// Unit ball given by its (centrally symmetric) extreme points, d <= 3.
  static NormSpec from_ball_vertices(int dim, const std::vector<Vector>& vertices);
  /// Hexagonal prism with extreme points (cos(k pi/3), sin(k pi/3), +-1).
  static NormSpec hexagonal_prism();

  int dim() const noexcept { return dim_; }
  NormKind kind() const noexcept { return kind_; }
  NormSource source() const noexcept { return source_; }
  /// Exponent for LQ/L1 sources; infinite for LInf.
  const Real& q() const noexcept { return q_; }
  bool q_infinite() const noexcept { return source_ == NormSource::LInf; }
  const std::vector<Covector>& facets() const noexcept { return facets_; }
  /// Extreme points if the norm was built from them.
  const std::vector<Vector>& ball_vertices() const noexcept { return ball_vertices_; }

  /// Euclidean, or an l_q norm with q = 2: infinite linear isometry group.
  bool euclidean_equivalent() const noexcept { return kind_ == NormKind::Euclidean; }
  bool has_finite_isometry_group() const noexcept { return !euclidean_equivalent(); }
  bool is_quadrilateral() const noexcept {
    return kind_ == NormKind::Polyhedral && dim_ == 2 && facets_.size() == 4;
  }
  /// True when facet data is rational (trivially true for l2 and l_q).
  bool exact_data() const;

  /// Index of the antipodal pair {F, -F} for each facet, numbered in order of
  /// first appearance.
  const std::vector<int>& facet_pair() const noexcept { return facet_pair_; }
  std::size_t facet_pair_count() const noexcept { return facets_.size() / 2; }

  std::string describe() const;

 private:
  NormSpec(int dim, NormKind kind, NormSource source) : dim_(dim), kind_(kind), source_(source) {}
  void index_facet_pairs(double tol);

  int dim_;
  NormKind kind_;
  NormSource source_;
  Real q_ = 2;
  std::vector<Covector> facets_;
  std::vector<Vector> ball_vertices_;
  std::vector<int> facet_pair_;
};

Real evaluate(const NormSpec& norm, const Vector& x);

enum class Side { Minus, Plus };

/// psi_-(x; y) or psi_+(x; y), the one-sided directional derivatives of the
/// norm at x in direction y.
Real one_sided_derivative(const NormSpec& norm, const Vector& x, const Vector& y, Side side,
                          double tol = kDefaultTolerance);

/// Facets attaining max f(x) (polyhedral norms only).
std::vector<std::size_t> active_facets(const NormSpec& norm, const Vector& x,
                                       double tol = kDefaultTolerance);

/// The unique support functional at x / ||x||, or nullopt when the norm is not
/// smooth there. Throws for x = 0.
std::optional<Covector> support_functional(const NormSpec& norm, const Vector& x,
                                           double tol = kDefaultTolerance);

struct IsometryGroup {
  bool finite = false;
  std::vector<Matrix> elements;
};

/// All linear isometries. Polyhedral norms are searched by brute force over
/// images of a spanning facet tuple (d <= 3, <= 60 facets).
IsometryGroup linear_isometry_group(const NormSpec& norm, double tol = kDefaultTolerance);

/// Whether the invertible matrix m maps the unit ball onto itself.
bool is_isometry(const NormSpec& norm, const Matrix& m, double tol = kDefaultTolerance);

/// Index of the facet equal to f (within tolerance), if any.
std::optional<std::size_t> find_facet(const NormSpec& norm, const Covector& f,
                                      double tol = kDefaultTolerance);

}  // namespace normrig

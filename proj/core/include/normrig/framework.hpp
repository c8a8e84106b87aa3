#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normrig/error.hpp"
#include "normrig/graph.hpp"
#include "normrig/linalg.hpp"
#include "normrig/norms.hpp"

namespace normrig {

/// A bar-joint framework (G, p) in a normed space.
class Framework {
 public:
  /// Validates that points match the graph and the norm dimension and that the
  /// placement is injective.
  Framework(Graph graph, std::vector<Vector> points, NormSpec norm);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Vector>& points() const noexcept { return points_; }
  const Vector& point(std::size_t v) const { return points_.at(v); }
  const NormSpec& norm() const noexcept { return norm_; }
  int dim() const noexcept { return norm_.dim(); }

  /// p(u) - p(v) for the edge (u < v).
  Vector difference(const Edge& e) const { return points_[e.u] - points_[e.v]; }
  /// Placement and norm data are all rational.
  bool exact_data() const;

  Framework with_points(std::vector<Vector> points) const;

 private:
  Graph graph_;
  std::vector<Vector> points_;
  NormSpec norm_;
};

struct WellPositionedReport {
  bool ok = true;
  std::vector<Edge> bad_edges;
};

/// An edge is bad when the norm is not smooth at its direction.
WellPositionedReport well_positioned(const Framework& fw, double tol = kDefaultTolerance);

/// Thrown by operations that need the rigidity matrix on a framework with
/// non-smooth edge directions.
class NotWellPositionedError : public Error {
 public:
  explicit NotWellPositionedError(std::vector<Edge> edges, const std::string& what)
      : Error(ErrorCode::NotWellPositioned, what), edges_(std::move(edges)) {}
  const std::vector<Edge>& edges() const noexcept { return edges_; }

 private:
  std::vector<Edge> edges_;
};

/// Edge lengths ||p(u) - p(v)|| in graph edge order.
Vector rigidity_map(const Framework& fw);

/// |E| x d|V| matrix; the row of edge uv holds phi_{u,v} in the block of u and
/// -phi_{u,v} in the block of v, where phi_{u,v} is the normalised support
/// functional of p(u) - p(v).
struct RigidityMatrix {
  Matrix matrix;
  std::vector<Covector> phi;
};

RigidityMatrix rigidity_matrix(const Framework& fw, double tol = kDefaultTolerance);

/// Largest relative error between R(G,p) u and the central difference
/// (f_G(p + t u) - f_G(p - t u)) / 2t over random directions u.
double finite_difference_check(const Framework& fw, int trials, double step,
                               std::uint64_t seed = 1);

enum class FlexKind { Full, Trivial };

struct FlexSpace {
  FlexKind kind = FlexKind::Full;
  std::vector<Vector> basis;
  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Translations when the isometry group is finite; translations plus
/// infinitesimal rotations for Euclidean norms (rank of the generators).
FlexSpace trivial_flex_space(const Framework& fw, const ScalarContext& ctx);

/// Kernel of the rigidity matrix.
FlexSpace flex_space(const Framework& fw, const ScalarContext& ctx);

enum class Verdict { Flexible, RigidRedundant, Isostatic, NotWellPositioned };

const char* to_string(Verdict v);

/// One Maxwell-type counting check. `applicable` is false when the premise
/// (rigidity / isostaticity) does not hold for this framework, in which case
/// `pass` records only whether the count happens to hold.
struct CountCheck {
  std::string id;
  std::string statement;
  bool applicable = false;
  bool evaluated = true;
  bool pass = true;
  long lhs = 0;
  long rhs = 0;
  std::vector<std::size_t> witness;
};

struct RigidityVerdict {
  Verdict verdict = Verdict::Flexible;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t rank = 0;
  std::size_t dim_flex = 0;
  std::size_t dim_trivial = 0;
  bool rows_independent = false;
  std::vector<Edge> bad_edges;
  std::vector<CountCheck> maxwell_report;
  ScalarContext context;
};

/// Decides Flexible / RigidRedundant / Isostatic / NotWellPositioned and
/// evaluates the three Maxwell count checks. The backend defaults to Exact
/// when the rigidity matrix is rational.
RigidityVerdict classify_rigidity(const Framework& fw, std::optional<Backend> requested = std::nullopt,
                                  double tol = kDefaultTolerance);

}  // namespace normrig

#include "normrig/framework.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "normrig/sparsity.hpp"

namespace normrig {

namespace {

std::string edge_label(const Graph& g, const Edge& e) { return g.id(e.u) + "-" + g.id(e.v); }

// Rows scaled by ||p(u) - p(v)|| for Euclidean norms so rational placements
// keep an exact matrix; the row space is unchanged.
Matrix rank_matrix(const Framework& fw, double tol) {
  if (fw.norm().kind() != NormKind::Euclidean) return rigidity_matrix(fw, tol).matrix;
  const auto& g = fw.graph();
  const auto d = static_cast<std::size_t>(fw.dim());
  Matrix m(g.edge_count(), d * g.vertex_count());
  for (std::size_t r = 0; r < g.edge_count(); ++r) {
    const auto& e = g.edges()[r];
    auto x = fw.difference(e);
    for (std::size_t i = 0; i < d; ++i) {
      m(r, e.u * d + i) = x[i];
      m(r, e.v * d + i) = -x[i];
    }
  }
  return m;
}

}  // namespace

Framework::Framework(Graph graph, std::vector<Vector> points, NormSpec norm)
    : graph_(std::move(graph)), points_(std::move(points)), norm_(std::move(norm)) {
  if (points_.size() != graph_.vertex_count())
    throw Error(ErrorCode::DimensionMismatch, "placement has " + std::to_string(points_.size()) +
                                                  " points for " + std::to_string(graph_.vertex_count()) +
                                                  " vertices");
  for (std::size_t v = 0; v < points_.size(); ++v)
    if (points_[v].size() != static_cast<std::size_t>(norm_.dim()))
      throw Error(ErrorCode::DimensionMismatch, "point of " + graph_.id(v) + " has wrong dimension");
  for (std::size_t a = 0; a < points_.size(); ++a)
    for (std::size_t b = a + 1; b < points_.size(); ++b)
      if (near(points_[a], points_[b]))
        throw Error(ErrorCode::InvalidInput,
                    "placement is not injective: " + graph_.id(a) + " and " + graph_.id(b) + " coincide");
}

bool Framework::exact_data() const {
  return norm_.exact_data() &&
         std::all_of(points_.begin(), points_.end(), [](const Vector& p) { return all_exact(p); });
}

Framework Framework::with_points(std::vector<Vector> points) const {
  return Framework(graph_, std::move(points), norm_);
}

WellPositionedReport well_positioned(const Framework& fw, double tol) {
  WellPositionedReport out;
  for (const auto& e : fw.graph().edges()) {
    if (!support_functional(fw.norm(), fw.difference(e), tol)) {
      out.ok = false;
      out.bad_edges.push_back(e);
    }
  }
  return out;
}

Vector rigidity_map(const Framework& fw) {
  Vector out;
  out.reserve(fw.graph().edge_count());
  for (const auto& e : fw.graph().edges()) out.push_back(evaluate(fw.norm(), fw.difference(e)));
  return out;
}

RigidityMatrix rigidity_matrix(const Framework& fw, double tol) {
  const auto& g = fw.graph();
  const auto d = static_cast<std::size_t>(fw.dim());
  RigidityMatrix out{Matrix(g.edge_count(), d * g.vertex_count()), {}};
  std::vector<Edge> bad;
  for (std::size_t r = 0; r < g.edge_count(); ++r) {
    const auto& e = g.edges()[r];
    auto phi = support_functional(fw.norm(), fw.difference(e), tol);
    if (!phi) {
      bad.push_back(e);
      out.phi.emplace_back();
      continue;
    }
    for (std::size_t i = 0; i < d; ++i) {
      out.matrix(r, e.u * d + i) = (*phi)[i];
      out.matrix(r, e.v * d + i) = -(*phi)[i];
    }
    out.phi.push_back(std::move(*phi));
  }
  if (!bad.empty()) {
    std::string what = "not well-positioned at";
    for (const auto& e : bad) what += " " + edge_label(g, e);
    throw NotWellPositionedError(std::move(bad), what);
  }
  return out;
}

double finite_difference_check(const Framework& fw, int trials, double step, std::uint64_t seed) {
  auto rm = rigidity_matrix(fw);
  const auto d = static_cast<std::size_t>(fw.dim());
  const auto n = fw.graph().vertex_count();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst = 0.0;
  auto lengths = [&](const std::vector<double>& flat) {
    std::vector<double> out;
    for (const auto& e : fw.graph().edges()) {
      Vector x(d);
      for (std::size_t i = 0; i < d; ++i) x[i] = Real::inexact(flat[e.u * d + i] - flat[e.v * d + i]);
      out.push_back(evaluate(fw.norm(), x).to_double());
    }
    return out;
  };
  std::vector<double> base(n * d);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < d; ++i) base[v * d + i] = fw.point(v)[i].to_double();
  for (int t = 0; t < trials; ++t) {
    std::vector<double> u(n * d);
    for (auto& x : u) x = dist(rng);
    auto plus = base, minus = base;
    for (std::size_t i = 0; i < u.size(); ++i) {
      plus[i] += step * u[i];
      minus[i] -= step * u[i];
    }
    auto fp = lengths(plus), fm = lengths(minus);
    std::vector<double> ru(fw.graph().edge_count(), 0.0);
    double scale = 0.0;
    for (auto x : u) scale = std::max(scale, std::abs(x));
    for (std::size_t r = 0; r < ru.size(); ++r) {
      for (std::size_t c = 0; c < u.size(); ++c) ru[r] += rm.matrix(r, c).to_double() * u[c];
      scale = std::max(scale, std::abs(ru[r]));
    }
    for (std::size_t r = 0; r < ru.size(); ++r) {
      double fd = (fp[r] - fm[r]) / (2.0 * step);
      worst = std::max(worst, std::abs(fd - ru[r]) / scale);
    }
  }
  return worst;
}

FlexSpace trivial_flex_space(const Framework& fw, const ScalarContext& ctx) {
  const auto d = static_cast<std::size_t>(fw.dim());
  const auto n = fw.graph().vertex_count();
  FlexSpace out{FlexKind::Trivial, {}};
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < d; ++i) {
    Vector t(n * d, Real(0));
    for (std::size_t v = 0; v < n; ++v) t[v * d + i] = 1;
    gens.push_back(std::move(t));
  }
  if (fw.norm().euclidean_equivalent()) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        Vector w(n * d, Real(0));
        for (std::size_t v = 0; v < n; ++v) {
          w[v * d + i] = -fw.point(v)[j];
          w[v * d + j] = fw.point(v)[i];
        }
        gens.push_back(std::move(w));
      }
  }
  if (n == 0) return out;
  // keep a maximal independent subset of the generators
  for (auto& gvec : gens) {
    auto trial = out.basis;
    trial.push_back(gvec);
    if (rank(Matrix::from_rows(trial), ctx) == trial.size()) out.basis = std::move(trial);
  }
  return out;
}

FlexSpace flex_space(const Framework& fw, const ScalarContext& ctx) {
  auto rn = rank_nullspace(rank_matrix(fw, ctx.tolerance), ctx);
  return {FlexKind::Full, std::move(rn.kernel)};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Flexible: return "Flexible";
    case Verdict::RigidRedundant: return "RigidRedundant";
    case Verdict::Isostatic: return "Isostatic";
    case Verdict::NotWellPositioned: return "NotWellPositioned";
  }
  return "?";
}

RigidityVerdict classify_rigidity(const Framework& fw, std::optional<Backend> requested, double tol) {
  RigidityVerdict out;
  const auto& g = fw.graph();
  out.vertices = g.vertex_count();
  out.edges = g.edge_count();
  auto wp = well_positioned(fw, tol);
  if (!wp.ok) {
    out.verdict = Verdict::NotWellPositioned;
    out.bad_edges = wp.bad_edges;
    out.context = resolve_context(fw.exact_data(), requested, tol);
    return out;
  }
  Matrix m = rank_matrix(fw, tol);
  out.context = resolve_context(m.all_exact(), requested, tol);
  const auto d = static_cast<std::size_t>(fw.dim());
  out.rank = rank(m, out.context);
  out.dim_flex = d * out.vertices - out.rank;
  out.dim_trivial = trivial_flex_space(fw, out.context).dimension();
  out.rows_independent = out.rank == out.edges;
  const bool rigid = out.dim_flex == out.dim_trivial;
  out.verdict = !rigid ? Verdict::Flexible
                       : (out.rows_independent ? Verdict::Isostatic : Verdict::RigidRedundant);

  const long need = static_cast<long>(d * out.vertices) - static_cast<long>(out.dim_trivial);
  const long have = static_cast<long>(out.edges);
  CountCheck c1{"rigid-count", "rigid implies |E| >= d|V| - dim T", rigid, true, have >= need, have, need, {}};
  CountCheck c2{"isostatic-count", "isostatic implies |E| = d|V| - dim T",
                out.verdict == Verdict::Isostatic, true, have == need, have, need, {}};
  CountCheck c3{"subgraph-count", "independent rows imply |E'| <= d|V'| - dim T for every subgraph",
                out.rows_independent, false, true, 0, 0, {}};
  std::optional<SparsityParams> params;
  if (fw.norm().has_finite_isometry_group())
    params = SparsityParams{static_cast<int>(d), static_cast<int>(d)};
  else if (d == 2)
    params = SparsityParams{2, 3};
  if (params) {
    c3.evaluated = true;
    auto sp = is_sparse(g, *params);
    c3.pass = sp.sparse;
    c3.witness = sp.witness;
    c3.statement += " (" + std::to_string(params->k) + "," + std::to_string(params->l) + ")-sparse";
    if (!sp.sparse) {
      c3.lhs = static_cast<long>(g.induced_edge_count(sp.witness));
      c3.rhs = params->bound(sp.witness.size());
    }
  }
  out.maxwell_report = {c1, c2, c3};
  return out;
}

}  // namespace normrig

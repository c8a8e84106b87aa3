#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "normrig/document.hpp"
#include "normrig/explorer.hpp"
#include "normrig/framework.hpp"
#include "normrig/polyhedral.hpp"
#include "normrig/sparsity.hpp"
#include "normrig/symmetry.hpp"
#include "support.hpp"

using namespace normrig;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure, keeps going.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && out_.pass) out_.detail = what;
    out_.pass = out_.pass && ok;
  }
  Outcome done(std::string summary) {
    if (out_.pass) out_.detail = std::move(summary);
    return out_;
  }

 private:
  Outcome out_;
};

const std::array<const char*, 6> kFig1{"fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig1f"};
const std::array<const char*, 9> kFig2D{"fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig1f",
                                        "fig3a", "fig3b", "fig3c"};

std::pair<std::size_t, std::size_t> fixed_counts(const AnalysisDocument& d, const std::string& el) {
  const auto& g = d.framework->graph();
  const auto& a = *d.group;
  const auto k = *a.find(el);
  std::size_t v = 0, e = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) v += a.image(k, i) == i;
  for (const auto& x : g.edges()) e += a.image(k, x) == x;
  return {v, e};
}

const Condition* condition(const ConditionReport& r, const std::string& id) {
  for (const auto& c : r.conditions)
    if (c.id == id) return &c;
  return nullptr;
}

Outcome fig1_suite() {
  Checker c;
  for (const char* name : kFig1) {
    auto d = testsupport::fixture(name);
    const auto& fw = *d.framework;
    auto v = classify_rigidity(fw, Backend::Exact);
    c.expect(v.verdict == Verdict::Isostatic, std::string(name) + " is " + to_string(v.verdict));
    c.expect(fw.graph().edge_count() == 2 * fw.graph().vertex_count() - 2, std::string(name) + " edge count");
    c.expect(tree_decomposition_check(edge_colors(fw)), std::string(name) + " monochrome trees");
  }
  return c.done("six max-norm frameworks isostatic, |E| = 2|V| - 2, both colour classes spanning trees");
}

Outcome fig1_counts() {
  Checker c;
  c.expect(fixed_counts(testsupport::fixture("fig1a"), "s").first == 1, "fig1a |V_s|");
  c.expect(fixed_counts(testsupport::fixture("fig1b"), "s").first == 2, "fig1b |V_s|");
  c.expect(fixed_counts(testsupport::fixture("fig1c"), "r") == std::pair<std::size_t, std::size_t>{0, 2},
           "fig1c (|V_2|, |E_2|)");
  c.expect(fixed_counts(testsupport::fixture("fig1d"), "r").first == 1, "fig1d |V_4|");
  for (const char* name : kFig1) {
    auto d = testsupport::fixture(name);
    auto rep = symmetric_count_check(*d.framework, *d.group);
    c.expect(rep.pass(), std::string(name) + " symmetric count rules");
    c.expect(!rep.checks.empty(), std::string(name) + " no rules evaluated");
  }
  return c.done("fixed counts (1), (2), (0,2), (1) and every count rule holds");
}

Outcome fig3_suite() {
  Checker c;
  for (auto [name, id] : {std::pair{"fig3a", "mirror-subgraph"}, std::pair{"fig3b", "halfturn-subgraph"}}) {
    auto d = testsupport::fixture(name);
    auto v = classify_rigidity(*d.framework, Backend::Exact);
    const bool deficient = v.rank < v.edges || v.dim_flex > v.dim_trivial;
    c.expect(v.verdict != Verdict::Isostatic && deficient, std::string(name) + " should not be isostatic");
    auto r = quadrilateral_conditions(*d.framework, *d.group);
    auto cond = condition(r, id);
    c.expect(cond && !cond->pass && cond->strength == Strength::Proven && !cond->witness.empty(),
             std::string(name) + " symmetric tight subgraph not flagged");
  }
  auto d = testsupport::fixture("fig3c");
  auto v = classify_rigidity(*d.framework, Backend::Exact);
  c.expect(v.verdict == Verdict::Isostatic, "fig3c is " + std::string(to_string(v.verdict)));
  c.expect(facet_action(d.norm, d.group->tau(*d.group->find("s"))) == FacetAction::Swaps, "fig3c mirror swaps");
  c.expect(fixed_counts(d, "s").second == 0, "fig3c |E_s|");
  return c.done("fig3a/b flexible with flagged symmetric tight subgraph, fig3c isostatic with |E_s| = 0");
}

Outcome example_3d() {
  Checker c;
  auto d = testsupport::fixture("example3d");
  const auto& fw = *d.framework;
  c.expect(fw.graph().vertex_count() == 13 && fw.graph().edge_count() == 36, "13 vertices, 36 edges");
  auto v = classify_rigidity(fw, Backend::Float, 1e-9);
  c.expect(v.verdict == Verdict::Isostatic, std::string("verdict ") + to_string(v.verdict));
  c.expect(v.rank == 36 && v.rank == 3 * 13 - 3, "rank " + std::to_string(v.rank));
  c.expect(v.dim_flex == 3 && v.dim_trivial == 3, "kernel is not the translations");
  c.expect(validate_symmetric_framework(fw, *d.group, 1e-9).ok, "symmetry does not validate");
  c.expect(d.group->name() == "c3h" && d.group->order() == 6, "group");
  int improper = 0;
  for (std::size_t g = 0; g < d.group->order(); ++g) {
    auto op = classify_operation(d.group->tau(g), 3, 1e-9);
    if (op.kind != OpKind::ImproperRotation) continue;
    ++improper;
    auto [vf, ef] = fixed_counts(d, d.group->element_name(g));
    c.expect(vf == 1 && ef == 0, "fixed counts of " + d.group->element_name(g));
  }
  c.expect(improper == 2, "expected two improper rotations of order 6");
  c.expect(symmetric_count_check(fw, *d.group, 1e-9).pass(), "symmetric count rules");
  return c.done("rank 36 = 3*13 - 3, kernel = translations, symmetry validates, S3 fixes (1, 0)");
}

Outcome intertwining() {
  Checker c;
  double worst = 0;
  for (const char* name : kFig2D) {
    auto d = testsupport::fixture(name);
    double r = intertwining_check(*d.framework, *d.group);
    c.expect(r == 0.0, std::string(name) + " residual " + std::to_string(r));
  }
  auto d = testsupport::fixture("example3d");
  worst = intertwining_check(*d.framework, *d.group, 1e-9);
  c.expect(worst <= 1e-9, "example3d residual " + std::to_string(worst));
  std::ostringstream os;
  os << "exact residual 0 on nine fixtures, float residual " << worst;
  return c.done(os.str());
}

// character-table rows transcribed from the reference tables, by operation class
std::pair<double, double> reference_row(const SymmetryOpClass& op, int dim, std::size_t v) {
  const double V = static_cast<double>(v);
  const double tc = 2 * std::cos(2 * M_PI / op.n);
  if (dim == 2) {
    switch (op.kind) {
      case OpKind::Identity: return {2 * V, 2};
      case OpKind::Reflection: return {0, 0};
      case OpKind::Rotation: return op.n == 2 ? std::pair{-2 * V, -2.0} : std::pair{tc * V, tc};
      default: break;
    }
  } else if (dim == 3) {
    switch (op.kind) {
      case OpKind::Identity: return {3 * V, 3};
      case OpKind::Reflection: return {V, 1};
      case OpKind::Inversion: return {-3 * V, -3};
      case OpKind::Rotation: return op.n == 2 ? std::pair{-V, -1.0} : std::pair{(tc + 1) * V, tc + 1};
      case OpKind::ImproperRotation: return {(tc - 1) * V, tc - 1};
    }
  }
  return {NAN, NAN};
}

Outcome characters() {
  Checker c;
  std::set<std::string> classes;
  std::vector<const char*> names(kFig2D.begin(), kFig2D.end());
  names.push_back("example3d");
  for (const char* name : names) {
    auto d = testsupport::fixture(name);
    const int dim = d.framework->dim();
    for (const auto& row : character_table(*d.framework, *d.group, 1e-9)) {
      auto [v, e] = fixed_counts(d, row.element);
      auto [pv, t] = reference_row(row.op, dim, v);
      classes.insert(std::to_string(dim) + "D " + row.op.symbol());
      const std::string where = std::string(name) + " " + row.element;
      c.expect(row.chi_pe == static_cast<long>(e), where + " chi(P_E)");
      c.expect(std::abs(row.chi_tau_pv.to_double() - pv) < 1e-9, where + " chi(tau x P_V)");
      c.expect(std::abs(row.chi_trivial.to_double() - t) < 1e-9, where + " chi(T)");
    }
  }
  std::string list;
  for (const auto& s : classes) list += (list.empty() ? "" : ", ") + s;
  return c.done("rows match for " + list);
}

Outcome finite_differences() {
  Checker c;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-1, 1);
  std::bernoulli_distribution coin(0.6);
  double worst = 0;
  int built = 0;
  for (int dim : {2, 3}) {
    for (const auto& norm : {NormSpec::euclidean(dim), NormSpec::lq(dim, Real(3)), NormSpec::linf(dim)}) {
      int made = 0;
      while (made < 100) {
        const std::size_t n = 3 + rng() % 4;
        Graph g(n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng) || b == a + 1) g.add_edge(a, b);
        std::vector<Vector> pts;
        for (std::size_t v = 0; v < n; ++v) {
          std::vector<double> p(dim);
          for (auto& x : p) x = coord(rng);
          pts.push_back(from_doubles(p));
        }
        Framework fw(g, pts, norm);
        if (!well_positioned(fw, 1e-3).ok) continue;
        worst = std::max(worst, finite_difference_check(fw, 3, 1e-6, rng()));
        ++made;
      }
      built += made;
    }
  }
  c.expect(worst <= 1e-5, "max error " + std::to_string(worst));
  std::ostringstream os;
  os << built << " frameworks, max relative error " << worst;
  return c.done(os.str());
}

Outcome sparsity_oracle() {
  Checker c;
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> dens(0.15, 0.95);
  std::vector<Graph> corpus;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 8;
    std::bernoulli_distribution coin(dens(rng));
    Graph g(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (coin(rng)) g.add_edge(a, b);
    corpus.push_back(g);
  }
  for (const char* name : kFig2D) corpus.push_back(testsupport::fixture(name).framework->graph());
  corpus.push_back(testsupport::fixture("example3d").framework->graph());
  int tight = 0;
  for (const auto& g : corpus) {
    for (auto p : {SparsityParams{2, 2}, SparsityParams{2, 3}, SparsityParams{3, 3}}) {
      if (g.vertex_count() > 16) continue;
      const bool sparse = is_sparse(g, p).sparse;
      c.expect(sparse == brute_force_sparse(g, p), "sparsity mismatch");
      const bool t = is_tight(g, p);
      c.expect(t == brute_force_tight(g, p), "tightness mismatch");
      tight += t;
    }
  }
  return c.done(std::to_string(corpus.size()) + " graphs x 3 parameter pairs agree (" + std::to_string(tight) +
                " tight)");
}

Outcome soundness_sweep() {
  Checker c;
  std::size_t candidates = 0, witnesses = 0, refute = 0;
  for (const char* group : {"cs", "cs_diag", "c2", "c4", "c2v", "c2v_diag", "c4v"}) {
    ScanConfig cfg;
    cfg.group = group;
    cfg.max_vertices = 6;
    cfg.trials = 200;
    cfg.seed = 1;
    cfg.probe_violators = true;
    auto rep = conjecture_scan(cfg);
    candidates += rep.entries.size();
    refute += rep.would_refute;
    for (const auto& e : rep.entries) {
      if (!e.placement.witness) continue;
      ++witnesses;
      const auto& w = *e.placement.witness;
      c.expect(classify_rigidity(w, Backend::Exact).verdict == Verdict::Isostatic,
               std::string(group) + " witness not isostatic");
      c.expect(validate_symmetric_framework(w, e.candidate.action).ok, std::string(group) + " witness not symmetric");
    }
  }
  c.expect(refute == 0, std::to_string(refute) + " WOULD-REFUTE-NECESSITY flags");
  return c.done(std::to_string(candidates) + " candidates, " + std::to_string(witnesses) +
                " witnesses re-validated, 0 WOULD-REFUTE-NECESSITY");
}

// independent count: linear maps sending a basis of ball vertices to ball vertices
// and permuting the whole vertex set
std::size_t brute_force_isometries(const std::vector<std::array<double, 3>>& verts, int dim) {
  std::vector<std::size_t> basis;
  auto det = [&](const std::vector<std::array<double, 3>>& m) {
    if (dim == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  // greedy basis
  std::function<bool(std::size_t)> pick = [&](std::size_t start) {
    if (basis.size() == static_cast<std::size_t>(dim)) {
      std::vector<std::array<double, 3>> m;
      for (auto b : basis) m.push_back(verts[b]);
      return std::abs(det(m)) > 1e-9;
    }
    for (std::size_t i = start; i < verts.size(); ++i) {
      basis.push_back(i);
      if (pick(i + 1)) return true;
      basis.pop_back();
    }
    return false;
  };
  pick(0);
  std::vector<std::array<double, 3>> B;
  for (auto b : basis) B.push_back(verts[b]);
  // solve M * B^T = W^T via Cramer's rule, row by row
  auto solve = [&](const std::vector<std::array<double, 3>>& W) {
    std::array<std::array<double, 3>, 3> M{};
    const double D = det(B);
    for (int r = 0; r < dim; ++r)
      for (int col = 0; col < dim; ++col) {
        auto Bc = B;
        for (int k = 0; k < dim; ++k) Bc[k][col] = W[k][r];
        M[r][col] = det(Bc) / D;
      }
    return M;
  };
  std::size_t count = 0;
  const std::size_t n = verts.size();
  std::vector<std::size_t> idx(dim, 0);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == dim) {
      std::vector<std::array<double, 3>> W;
      for (auto i : idx) W.push_back(verts[i]);
      if (std::abs(det(W)) < 1e-9) return;
      auto M = solve(W);
      for (const auto& v : verts) {
        std::array<double, 3> img{};
        for (int r = 0; r < dim; ++r)
          for (int k = 0; k < dim; ++k) img[r] += M[r][k] * v[k];
        bool hit = false;
        for (const auto& u : verts) {
          double diff = 0;
          for (int r = 0; r < dim; ++r) diff = std::max(diff, std::abs(u[r] - img[r]));
          hit = hit || diff < 1e-9;
        }
        if (!hit) return;
      }
      ++count;
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      idx[depth] = i;
      rec(depth + 1);
    }
  };
  rec(0);
  return count;
}

bool forms_group(const std::vector<Matrix>& g) {
  auto contains = [&](const Matrix& m) {
    for (const auto& x : g)
      if (near(x, m, 1e-9)) return true;
    return false;
  };
  if (g.empty() || !contains(Matrix::identity(g[0].rows()))) return false;
  for (const auto& a : g) {
    if (!contains(inverse(a, 1e-9))) return false;
    for (const auto& b : g)
      if (!contains(a * b)) return false;
  }
  return true;
}

Outcome isometry_groups() {
  Checker c;
  auto sq = linear_isometry_group(NormSpec::linf(2));
  c.expect(sq.finite && sq.elements.size() == 8, "max norm: " + std::to_string(sq.elements.size()) + " elements");
  c.expect(forms_group(sq.elements), "max-norm isometries do not form a group");
  std::vector<std::array<double, 3>> square{{1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}};
  c.expect(brute_force_isometries(square, 2) == 8, "square oracle");
  auto hex = linear_isometry_group(NormSpec::hexagonal_prism());
  std::vector<std::array<double, 3>> prism;
  for (int k = 0; k < 6; ++k)
    for (double z : {1.0, -1.0}) prism.push_back({std::cos(M_PI * k / 3), std::sin(M_PI * k / 3), z});
  const auto oracle = brute_force_isometries(prism, 3);
  c.expect(oracle == 24, "prism oracle counts " + std::to_string(oracle));
  c.expect(hex.finite && hex.elements.size() == oracle, "prism: " + std::to_string(hex.elements.size()) + " elements");
  c.expect(forms_group(hex.elements), "prism isometries do not form a group");
  return c.done("max norm in the plane: 8, hexagonal prism: 24 (brute-force oracle agrees), both closed groups");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
    double budget_ms;
  };
  const Criterion criteria[] = {
      {1, "fig1 suite", fig1_suite, 1000},
      {2, "fig1 fixed counts", fig1_counts, 0},
      {3, "fig3 suite", fig3_suite, 0},
      {4, "3D prism example", example_3d, 1000},
      {5, "intertwining", intertwining, 0},
      {6, "character tables", characters, 0},
      {7, "finite differences", finite_differences, 0},
      {8, "sparsity oracle", sparsity_oracle, 0},
      {9, "soundness sweep", soundness_sweep, 300000},
      {10, "isometry groups", isometry_groups, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_ms > 0 && ms > c.budget_ms) {
      o.pass = false;
      o.detail = "over time budget, " + o.detail;
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << o.detail << " ("
              << static_cast<long>(ms) << " ms)" << std::endl;
  }
  std::cout << (10 - failures) << "/10 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}

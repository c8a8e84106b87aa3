#include "normrig/polyhedral.hpp"

#include <algorithm>
#include <numeric>

#include "normrig/error.hpp"
#include "normrig/sparsity.hpp"
#include "normrig/symmetry.hpp"

namespace normrig {

namespace {

constexpr SparsityParams kTight22{2, 2};

bool is_spanning_tree(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 0 || edges.size() != n - 1) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    auto a = root(e.u), b = root(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool induced_tight(const Graph& g, const std::vector<std::size_t>& vs) {
  if (static_cast<long>(g.induced_edge_count(vs)) != kTight22.bound(vs.size())) return false;
  std::vector<std::size_t> index(g.vertex_count(), g.vertex_count());
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;
  Graph h(vs.size());
  for (const auto& e : g.edges())
    if (index[e.u] < vs.size() && index[e.v] < vs.size()) h.add_edge(index[e.u], index[e.v]);
  return is_sparse(h, kTight22).sparse;
}

// <g>-symmetric (2,2)-tight induced subgraphs avoiding g-fixed vertices and,
// when `no_fixed_edges`, g-fixed edges.
std::vector<std::vector<std::size_t>> symmetric_tight_avoiding(const Graph& g, const GroupAction& action,
                                                               std::size_t element, bool no_fixed_edges) {
  auto sub = action.restricted(action.cyclic_subgroup(element), "<" + action.element_name(element) + ">");
  std::vector<std::vector<std::size_t>> orbits;
  for (auto& o : sub.vertex_orbits())
    if (!(o.size() == 1 && action.image(element, o.front()) == o.front())) orbits.push_back(std::move(o));
  if (orbits.size() > 22) throw Error(ErrorCode::SizeCap, "too many vertex orbits for the subgraph search");
  std::vector<std::vector<std::size_t>> out;
  for (unsigned long mask = 1; mask < (1UL << orbits.size()); ++mask) {
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (mask >> i & 1UL) vs.insert(vs.end(), orbits[i].begin(), orbits[i].end());
    std::sort(vs.begin(), vs.end());
    if (no_fixed_edges) {
      bool fixed_edge = false;
      for (const auto& e : g.edges()) {
        if (std::binary_search(vs.begin(), vs.end(), e.u) && std::binary_search(vs.begin(), vs.end(), e.v) &&
            action.image(element, e) == e) {
          fixed_edge = true;
          break;
        }
      }
      if (fixed_edge) continue;
    }
    if (induced_tight(g, vs)) out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::string pair_text(std::size_t v, std::size_t e) {
  return "(|V_g|, |E_g|) = (" + std::to_string(v) + ", " + std::to_string(e) + ")";
}

}  // namespace

std::vector<Edge> ColoredGraph::monochrome(int label) const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) out.push_back(graph.edges()[i]);
  return out;
}

ColoredGraph edge_colors(const Framework& fw, double tol) {
  if (fw.norm().kind() != NormKind::Polyhedral)
    throw Error(ErrorCode::Unsupported, "edge colours need a polyhedral norm");
  ColoredGraph out;
  out.graph = fw.graph();
  out.dim = fw.dim();
  out.label_count = fw.norm().facet_pair_count();
  std::vector<Edge> bad;
  for (const auto& e : fw.graph().edges()) {
    auto act = active_facets(fw.norm(), fw.difference(e), tol);
    if (act.size() != 1) {
      bad.push_back(e);
      continue;
    }
    out.facets.push_back(act.front());
    out.labels.push_back(fw.norm().facet_pair()[act.front()]);
  }
  if (!bad.empty()) {
    std::string what = "not well-positioned at";
    for (const auto& e : bad) what += " " + fw.graph().id(e.u) + "-" + fw.graph().id(e.v);
    throw NotWellPositionedError(std::move(bad), what);
  }
  return out;
}

bool tree_decomposition_check(const ColoredGraph& cg, bool experimental_d_trees) {
  const std::size_t want = experimental_d_trees ? static_cast<std::size_t>(cg.dim) : 2;
  if (cg.label_count != want)
    throw Error(ErrorCode::InvalidInput, "tree decomposition needs " + std::to_string(want) +
                                             " facet pairs, norm has " + std::to_string(cg.label_count));
  for (std::size_t l = 0; l < cg.label_count; ++l)
    if (!is_spanning_tree(cg.graph.vertex_count(), cg.monochrome(static_cast<int>(l)))) return false;
  return true;
}

const char* to_string(FacetAction a) { return a == FacetAction::Preserves ? "Preserves" : "Swaps"; }

const char* to_string(Strength s) {
  switch (s) {
    case Strength::Proven: return "proven";
    case Strength::Conjectured: return "conjectured";
    case Strength::Diagnostic: return "diagnostic";
  }
  return "?";
}

FacetAction facet_action(const NormSpec& norm, const Matrix& tau, double tol) {
  if (!norm.is_quadrilateral()) throw Error(ErrorCode::Unsupported, "facet action needs a quadrilateral unit ball");
  bool iso = false;
  try {
    iso = is_isometry(norm, tau, tol);
  } catch (const Error&) {
    iso = false;
  }
  if (!iso) throw Error(ErrorCode::InvalidInput, "matrix is not an isometry of the norm");
  Matrix inv = inverse(tau, tol);
  for (std::size_t i = 0; i < norm.facets().size(); ++i) {
    auto j = find_facet(norm, norm.facets()[i] * inv, tol);
    if (!j) throw Error(ErrorCode::InvalidInput, "matrix does not permute the facets");
    if (norm.facet_pair()[*j] != norm.facet_pair()[i]) return FacetAction::Swaps;
  }
  return FacetAction::Preserves;
}

bool ConditionReport::proven_pass() const {
  return first_proven_failure() == nullptr;
}

bool ConditionReport::conjectured_pass() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const Condition& c) { return c.strength != Strength::Conjectured || c.pass; });
}

bool ConditionReport::diagnostics_pass() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const Condition& c) { return c.strength != Strength::Diagnostic || c.pass; });
}

const Condition* ConditionReport::first_proven_failure() const {
  for (const auto& c : conditions)
    if (c.strength == Strength::Proven && !c.pass) return &c;
  return nullptr;
}

std::vector<std::vector<std::size_t>> unfixed_symmetric_tight_subgraphs(const Graph& g, const GroupAction& action,
                                                                         std::size_t element) {
  return symmetric_tight_avoiding(g, action, element, true);
}

ConditionReport quadrilateral_conditions(const Graph& g, const GroupAction& action, const NormSpec& norm,
                                         double tol) {
  if (!norm.is_quadrilateral())
    throw Error(ErrorCode::Unsupported, "quadrilateral conditions need a quadrilateral unit ball");
  if (action.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "quadrilateral conditions are planar");
  if (auto bad = check_action_on_graph(action, g, tol)) throw Error(ErrorCode::InvalidInput, *bad);

  ConditionReport out;
  const auto n = action.order();
  std::vector<SymmetryOpClass> ops;
  std::vector<FacetAction> acts;
  std::vector<FixedElements> fixed;
  for (std::size_t e = 0; e < n; ++e) {
    ops.push_back(classify_operation(action.tau(e), 2, tol));
    acts.push_back(facet_action(norm, action.tau(e), tol));
    fixed.push_back(fixed_elements(g, action, e));
    out.facet_actions.emplace_back(action.element_name(e), acts.back());
  }
  auto add = [&](std::string id, std::string statement, std::size_t el, Strength s, bool pass,
                 std::vector<std::size_t> witness = {}) {
    out.conditions.push_back({std::move(id), std::move(statement), el < n ? action.element_name(el) : "",
                              s, pass, std::move(witness)});
  };

  auto sparse = is_sparse(g, kTight22);
  const bool tight = sparse.sparse && static_cast<long>(g.edge_count()) == kTight22.bound(g.vertex_count());
  auto tight_witness = sparse.sparse ? std::vector<std::size_t>{} : sparse.witness;
  add("tight", "G is (2,2)-tight", n, Strength::Proven, tight, tight_witness);

  for (const auto& c : symmetric_count_check(g, action, tol).checks) {
    auto idx = *action.find(c.element);
    add("count-" + c.rule, c.statement, idx, Strength::Proven, c.pass);
  }

  auto min_fixed_degree_ok = [&](std::size_t e) {
    return std::all_of(fixed[e].vertices.begin(), fixed[e].vertices.end(),
                       [&](std::size_t v) { return g.degree(v) >= 4; });
  };
  // per-element consequences of the reflection / half-turn proposition
  std::vector<std::vector<std::vector<std::size_t>>> unfixed(n);
  std::vector<std::vector<std::vector<std::size_t>>> no_vertex(n);
  for (std::size_t e = 0; e < n; ++e) {
    const std::size_t V = fixed[e].vertices.size(), E = fixed[e].edges.size();
    if (ops[e].kind == OpKind::Reflection && acts[e] == FacetAction::Preserves) {
      add("mirror-fixed", "|V_s| = 1 and |E_s| = 0: " + pair_text(V, E), e, Strength::Proven, V == 1 && E == 0,
          fixed[e].vertices);
      add("mirror-degree", "every vertex fixed by s has degree >= 4", e, Strength::Proven, min_fixed_degree_ok(e),
          fixed[e].vertices);
      no_vertex[e] = symmetric_tight_avoiding(g, action, e, false);
      add("mirror-subgraph", "every <s>-symmetric (2,2)-tight subgraph contains a vertex fixed by s", e,
          Strength::Proven, no_vertex[e].empty(),
          no_vertex[e].empty() ? std::vector<std::size_t>{} : no_vertex[e].front());
    } else if (ops[e].kind == OpKind::Reflection) {
      add("mirror-swap-edges", "|E_s| = 0", e, Strength::Proven, E == 0, {});
    }
    if (ops[e].kind == OpKind::Rotation && ops[e].n == 2) {
      unfixed[e] = symmetric_tight_avoiding(g, action, e, true);
      add("halfturn-subgraph", "no <C2>-symmetric (2,2)-tight subgraph without fixed vertices or edges", e,
          Strength::Proven, unfixed[e].empty(), unfixed[e].empty() ? std::vector<std::size_t>{} : unfixed[e].front());
      bool ok = (V == 1 && E == 0 && min_fixed_degree_ok(e)) || (V == 0 && E == 2);
      add("halfturn-fixed", "(|V_2| = 1, |E_2| = 0, fixed degree >= 4) or (|V_2| = 0, |E_2| = 2): " + pair_text(V, E),
          e, Strength::Proven, ok, fixed[e].vertices);
    }
  }

  auto find_op = [&](auto pred) -> std::optional<std::size_t> {
    for (std::size_t e = 0; e < n; ++e)
      if (pred(e)) return e;
    return std::nullopt;
  };
  auto is_reflection = [&](std::size_t e) { return ops[e].kind == OpKind::Reflection; };
  auto is_halfturn = [&](std::size_t e) { return ops[e].kind == OpKind::Rotation && ops[e].n == 2; };
  auto is_quarter = [&](std::size_t e) { return ops[e].kind == OpKind::Rotation && ops[e].n == 4; };
  auto subgraphs_for = [&](std::size_t e) {
    if (unfixed[e].empty() && !is_halfturn(e)) unfixed[e] = symmetric_tight_avoiding(g, action, e, true);
    return unfixed[e];
  };
  auto conj = [&](const std::string& id, const std::string& statement, std::size_t e, bool pass,
                  std::vector<std::size_t> witness = {}) {
    add("conj-" + id, statement, e, Strength::Conjectured, pass, std::move(witness));
  };
  auto conj_no_subgraph = [&](std::size_t e) {
    auto subs = subgraphs_for(e);
    conj("subgraph", "no <g>-symmetric (2,2)-tight subgraph without vertices or edges fixed by g", e, subs.empty(),
         subs.empty() ? std::vector<std::size_t>{} : subs.front());
  };
  auto conj_dichotomy = [&](std::size_t e) {
    const std::size_t V = fixed[e].vertices.size(), E = fixed[e].edges.size();
    conj("dichotomy", "(|V_g|, |E_g|) is (1, 0) or (0, 2): " + pair_text(V, E), e,
         (V == 1 && E == 0) || (V == 0 && E == 2));
  };
  auto conj_one_fixed = [&](std::size_t e) {
    const std::size_t V = fixed[e].vertices.size(), E = fixed[e].edges.size();
    conj("one-fixed", "|V_g| = 1 and |E_g| = 0: " + pair_text(V, E), e, V == 1 && E == 0);
  };
  auto conj_no_fixed_edges = [&](std::size_t e) {
    conj("no-fixed-edges", "|E_g| = 0", e, fixed[e].edges.empty());
  };
  auto conj_tight = [&]() { conj("tight", "G is (2,2)-tight", n, tight, tight_witness); };

  if (n == 1) {
    out.group_type = "c1";
  } else if (n == 2 && is_reflection(1 - action.identity())) {
    const std::size_t s = 1 - action.identity();
    if (acts[s] == FacetAction::Preserves) {
      out.group_type = "cs-preserving";
      conj_tight();
      conj_one_fixed(s);
      conj("degree", "the vertex fixed by s has degree >= 4", s, min_fixed_degree_ok(s));
      conj("contains-fixed", "every <s>-symmetric (2,2)-tight subgraph contains the fixed vertex", s,
           no_vertex[s].empty(), no_vertex[s].empty() ? std::vector<std::size_t>{} : no_vertex[s].front());
    } else {
      out.group_type = "cs-swapping";
      conj_tight();
      conj_no_fixed_edges(s);
    }
  } else if (n == 2 && is_halfturn(1 - action.identity())) {
    const std::size_t r = 1 - action.identity();
    out.group_type = "c2";
    conj_tight();
    conj_no_subgraph(r);
    const std::size_t V = fixed[r].vertices.size(), E = fixed[r].edges.size();
    conj("dichotomy", "(|V_2| = 1, |E_2| = 0, fixed degree >= 4) or (|V_2| = 0, |E_2| = 2): " + pair_text(V, E), r,
         (V == 1 && E == 0 && min_fixed_degree_ok(r)) || (V == 0 && E == 2));
  } else if (n == 4 && find_op(is_quarter)) {
    const std::size_t r = *find_op(is_quarter);
    const std::size_t r2 = action.multiply(r, r);
    out.group_type = "c4";
    conj_tight();
    conj_no_subgraph(r2);
    conj_dichotomy(r2);
  } else if (n == 4 && find_op(is_halfturn) && find_op(is_reflection)) {
    const std::size_t r = *find_op(is_halfturn);
    const std::size_t s = *find_op(is_reflection);
    const std::size_t rs = action.multiply(r, s);
    if (acts[s] == FacetAction::Preserves) {
      out.group_type = "c2v-preserving";
      conj_tight();
      for (std::size_t e = 0; e < n; ++e) {
        if (e == action.identity()) continue;
        conj_no_subgraph(e);
        conj_one_fixed(e);
      }
    } else {
      out.group_type = "c2v-swapping";
      conj_tight();
      conj_no_subgraph(r);
      conj_no_fixed_edges(s);
      conj_no_fixed_edges(rs);
      conj_dichotomy(r);
    }
  } else if (n == 8 && find_op(is_quarter) &&
             find_op([&](std::size_t e) { return is_reflection(e) && acts[e] == FacetAction::Preserves; })) {
    const std::size_t r = *find_op(is_quarter);
    const std::size_t s = *find_op([&](std::size_t e) { return is_reflection(e) && acts[e] == FacetAction::Preserves; });
    const std::size_t r2 = action.multiply(r, r);
    const std::size_t r2s = action.multiply(r2, s);
    out.group_type = "c4v";
    conj_tight();
    for (auto e : {s, r2, r2s}) conj_no_subgraph(e);
    conj_no_fixed_edges(s);
    conj_no_fixed_edges(r2s);
    conj_dichotomy(r2);
  } else {
    out.group_type = "other";
  }
  return out;
}

ConditionReport quadrilateral_conditions(const Framework& fw, const GroupAction& action, double tol) {
  auto valid = validate_symmetric_framework(fw, action, tol);
  if (!valid.ok) throw Error(ErrorCode::InvalidInput, "invalid symmetric framework: " + valid.message);
  auto out = quadrilateral_conditions(fw.graph(), action, fw.norm(), tol);
  if (!well_positioned(fw, tol).ok) return out;
  auto cg = edge_colors(fw, tol);
  for (std::size_t e = 0; e < action.order(); ++e) {
    if (facet_action(fw.norm(), action.tau(e), tol) != FacetAction::Preserves) continue;
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < cg.labels.size(); ++i) {
      Edge img = action.image(e, fw.graph().edges()[i]);
      auto j = *fw.graph().edge_index(img.u, img.v);
      if (cg.labels[j] != cg.labels[i]) {
        bad = {fw.graph().edges()[i].u, fw.graph().edges()[i].v};
        break;
      }
    }
    out.conditions.push_back({"color-commutes", "edge colours are invariant under a facet-preserving operation",
                              action.element_name(e), Strength::Diagnostic, bad.empty(), bad});
  }
  return out;
}

}  // namespace normrig

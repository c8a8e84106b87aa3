#include "normrig/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "normrig/error.hpp"
#include "normrig/sparsity.hpp"
#include "normrig/symmetry.hpp"

namespace normrig {

namespace {

using ElementSet = std::vector<std::size_t>;

ElementSet closure(const GroupTemplate& g, ElementSet gens) {
  std::set<std::size_t> out{0};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (auto s : gens) {
      auto y = g.table[x][s];
      if (out.insert(y).second) frontier.push_back(y);
    }
  }
  return {out.begin(), out.end()};
}

std::size_t inverse_of(const GroupTemplate& g, std::size_t x) {
  for (std::size_t y = 0; y < g.elements.size(); ++y)
    if (g.table[x][y] == 0) return y;
  return 0;
}

ElementSet conjugate(const GroupTemplate& g, const ElementSet& h, std::size_t x) {
  ElementSet out;
  auto xi = inverse_of(g, x);
  for (auto e : h) out.push_back(g.table[g.table[x][e]][xi]);
  std::sort(out.begin(), out.end());
  return out;
}

// One subgroup per conjugacy class, ordered by decreasing size.
std::vector<ElementSet> subgroup_classes(const GroupTemplate& g) {
  const auto n = g.elements.size();
  std::set<ElementSet> all;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) all.insert(closure(g, {a, b}));
  std::vector<ElementSet> reps;
  std::set<ElementSet> seen;
  for (const auto& h : all) {
    if (seen.count(h)) continue;
    reps.push_back(h);
    for (std::size_t x = 0; x < n; ++x) seen.insert(conjugate(g, h, x));
  }
  std::stable_sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return reps;
}

struct GSet {
  std::vector<std::size_t> types;  // orbit type per orbit
  std::vector<Permutation> theta;  // per group element
  std::vector<std::size_t> orbit_of;
  std::vector<std::size_t> reps;
  std::vector<ElementSet> stabilizers;  // per vertex
  std::size_t size = 0;
};

GSet build_gset(const GroupTemplate& g, const std::vector<ElementSet>& subgroups,
                const std::vector<std::size_t>& types) {
  const auto n = g.elements.size();
  GSet out;
  out.types = types;
  std::vector<std::vector<ElementSet>> cosets;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto& h = subgroups[types[i]];
    std::vector<ElementSet> cs;
    for (std::size_t x = 0; x < n; ++x) {
      ElementSet c;
      for (auto e : h) c.push_back(g.table[x][e]);
      std::sort(c.begin(), c.end());
      if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
    }
    offset.push_back(out.size);
    out.reps.push_back(out.size);
    for (std::size_t k = 0; k < cs.size(); ++k) out.orbit_of.push_back(i);
    out.size += cs.size();
    cosets.push_back(std::move(cs));
  }
  out.theta.assign(n, Permutation(out.size));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < types.size(); ++i)
      for (std::size_t k = 0; k < cosets[i].size(); ++k) {
        auto y = g.table[x][cosets[i][k].front()];
        for (std::size_t m = 0; m < cosets[i].size(); ++m)
          if (std::binary_search(cosets[i][m].begin(), cosets[i][m].end(), y))
            out.theta[x][offset[i] + k] = offset[i] + m;
      }
  out.stabilizers.resize(out.size);
  for (std::size_t v = 0; v < out.size; ++v)
    for (std::size_t x = 0; x < n; ++x)
      if (out.theta[x][v] == v) out.stabilizers[v].push_back(x);
  return out;
}

// Equivariant permutations of the G-set.
std::vector<Permutation> gset_automorphisms(const GSet& s, std::size_t limit) {
  std::vector<Permutation> out;
  const auto orbits = s.reps.size();
  Permutation phi(s.size, s.size);
  std::vector<bool> used_orbit(orbits, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (out.size() >= limit) throw Error(ErrorCode::SizeCap, "too many equivariant relabelings");
    if (i == orbits) {
      out.push_back(phi);
      return;
    }
    const auto r = s.reps[i];
    for (std::size_t w = 0; w < s.size; ++w) {
      auto j = s.orbit_of[w];
      if (used_orbit[j] || s.types[j] != s.types[i] || s.stabilizers[w] != s.stabilizers[r]) continue;
      used_orbit[j] = true;
      for (std::size_t x = 0; x < s.theta.size(); ++x) phi[s.theta[x][r]] = s.theta[x][w];
      rec(i + 1);
      used_orbit[j] = false;
    }
  };
  rec(0);
  return out;
}

std::vector<Edge> canonical_edges(const std::vector<Edge>& edges, const std::vector<Permutation>& autos) {
  std::vector<Edge> best;
  for (const auto& phi : autos) {
    std::vector<Edge> img;
    img.reserve(edges.size());
    for (const auto& e : edges) img.emplace_back(phi[e.u], phi[e.v]);
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

// Multisets of orbit types (non-decreasing type index) with total size n.
void orbit_multisets(const std::vector<std::size_t>& sizes, std::size_t n, std::size_t from,
                     std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t t = from; t < sizes.size(); ++t) {
    if (sizes[t] > n) continue;
    cur.push_back(t);
    orbit_multisets(sizes, n - sizes[t], t, cur, out);
    cur.pop_back();
  }
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t candidate, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(candidate), static_cast<std::uint32_t>(trial)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace

void ScanConfig::validate() const {
  if (!builtin_group(group)) throw Error(ErrorCode::InvalidInput, "unknown group '" + group + "'");
  if (!norm.is_quadrilateral())
    throw Error(ErrorCode::Unsupported, "the explorer needs a planar norm with a quadrilateral unit ball");
  if (min_vertices < 1 || max_vertices < min_vertices)
    throw Error(ErrorCode::InvalidInput, "vertex range is empty");
  if (max_vertices > 12) throw Error(ErrorCode::SizeCap, "the explorer is limited to 12 vertices");
  if (trials < 1) throw Error(ErrorCode::InvalidInput, "trials must be positive");
  if (denominator < 1) throw Error(ErrorCode::InvalidInput, "grid denominator must be positive");
}

const char* to_string(ScanFlag f) {
  switch (f) {
    case ScanFlag::None: return "NONE";
    case ScanFlag::PossibleCounterexample: return "POSSIBLE-COUNTEREXAMPLE";
    case ScanFlag::WouldRefuteNecessity: return "WOULD-REFUTE-NECESSITY";
  }
  return "?";
}

std::vector<Candidate> enumerate_candidates(const ScanConfig& cfg) {
  cfg.validate();
  const auto tmpl = *builtin_group(cfg.group);
  for (const auto& m : tmpl.tau)
    if (!is_isometry(cfg.norm, m))
      throw Error(ErrorCode::InvalidInput, "group " + cfg.group + " does not act by isometries of the norm");
  const auto subgroups = subgroup_classes(tmpl);
  std::vector<std::size_t> sizes;
  for (const auto& h : subgroups) sizes.push_back(tmpl.elements.size() / h.size());

  std::vector<Candidate> out;
  std::size_t nodes = 0;
  for (std::size_t n = cfg.min_vertices; n <= cfg.max_vertices; ++n) {
    const long target = 2 * static_cast<long>(n) - 2;
    std::vector<std::vector<std::size_t>> multisets;
    std::vector<std::size_t> cur;
    orbit_multisets(sizes, n, 0, cur, multisets);
    for (const auto& types : multisets) {
      auto gs = build_gset(tmpl, subgroups, types);
      // edge orbits of the G-set
      std::vector<std::vector<Edge>> edge_orbits;
      std::set<Edge> seen;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
          Edge e(u, v);
          if (seen.count(e)) continue;
          std::set<Edge> orb;
          for (const auto& th : gs.theta) orb.insert(Edge(th[u], th[v]));
          seen.insert(orb.begin(), orb.end());
          edge_orbits.emplace_back(orb.begin(), orb.end());
        }
      std::vector<long> suffix(edge_orbits.size() + 1, 0);
      for (std::size_t i = edge_orbits.size(); i-- > 0;)
        suffix[i] = suffix[i + 1] + static_cast<long>(edge_orbits[i].size());
      std::vector<std::vector<Edge>> found;
      std::vector<Edge> chosen;
      std::function<void(std::size_t, long, const PebbleGame&)> dfs = [&](std::size_t i, long count,
                                                                         const PebbleGame& game) {
        if (++nodes > cfg.max_search_nodes)
          throw Error(ErrorCode::SizeCap, "candidate enumeration exceeded the search budget");
        if (count == target) {
          found.push_back(chosen);
          return;
        }
        if (i == edge_orbits.size() || count + suffix[i] < target) return;
        const auto& orb = edge_orbits[i];
        if (count + static_cast<long>(orb.size()) <= target) {
          PebbleGame next = game;
          bool ok = true;
          for (const auto& e : orb)
            if (!next.try_add(e.u, e.v)) {
              ok = false;
              break;
            }
          if (ok) {
            chosen.insert(chosen.end(), orb.begin(), orb.end());
            dfs(i + 1, count + static_cast<long>(orb.size()), next);
            chosen.resize(chosen.size() - orb.size());
          }
        }
        dfs(i + 1, count, game);
      };
      dfs(0, 0, PebbleGame(n, SparsityParams{2, 2}));
      if (found.empty()) continue;
      auto autos = gset_automorphisms(gs, 200000);
      std::set<std::vector<Edge>> classes;
      for (const auto& edges : found) {
        auto canon = canonical_edges(edges, autos);
        if (!classes.insert(canon).second) continue;
        Graph g(n);
        for (const auto& e : canon) g.add_edge(e.u, e.v);
        Candidate c{out.size(), g, make_action(tmpl, gs.theta), {}, {}, false};
        for (auto r : gs.reps) {
          std::vector<std::string> names;
          for (auto x : gs.stabilizers[r]) names.push_back(tmpl.elements[x]);
          c.orbit_stabilizers.push_back(std::move(names));
        }
        c.conditions = quadrilateral_conditions(c.graph, c.action, cfg.norm);
        c.satisfies_conditions = c.conditions.proven_pass() && c.conditions.conjectured_pass();
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

PlacementResult search_placement(const Graph& g, const GroupAction& action, const ScanConfig& cfg,
                                 std::size_t candidate_id) {
  PlacementResult out;
  const auto d = static_cast<std::size_t>(action.dim());
  auto orbits = action.vertex_orbits();
  const long den = cfg.denominator;
  for (int t = 0; t < cfg.trials; ++t) {
    ++out.trials;
    std::mt19937_64 rng(trial_seed(cfg.seed, candidate_id, t));
    std::uniform_int_distribution<long> coord(-den, den);
    std::vector<Vector> points(g.vertex_count(), Vector(d));
    for (const auto& orb : orbits) {
      const auto r = orb.front();
      Vector x(d);
      for (auto& c : x) c = Real(coord(rng), den);
      auto stab = action.stabilizer(r);
      Vector avg(d, Real(0));
      for (auto h : stab) avg = avg + action.tau(h) * x;
      avg = Real(1, static_cast<long>(stab.size())) * avg;
      for (std::size_t el = 0; el < action.order(); ++el) points[action.image(el, r)] = action.tau(el) * avg;
    }
    std::optional<Framework> fw;
    try {
      fw.emplace(g, points, cfg.norm);
    } catch (const Error&) {
      continue;
    }
    ++out.injective;
    if (!well_positioned(*fw).ok) continue;
    ++out.well_positioned;
    auto verdict = classify_rigidity(*fw);
    out.max_rank = std::max(out.max_rank, verdict.rank);
    if (verdict.verdict == Verdict::Isostatic) {
      out.found = true;
      out.trial = t;
      out.witness = std::move(fw);
      return out;
    }
  }
  return out;
}

ScanReport conjecture_scan(const ScanConfig& cfg) {
  auto candidates = enumerate_candidates(cfg);
  ScanReport report;
  report.config = cfg;
  std::vector<std::optional<ScanEntry>> slots(candidates.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      ScanEntry entry{std::move(candidates[i]), false, {}, ScanFlag::None, {}};
      const auto& c = entry.candidate;
      for (const auto& cond : c.conditions.conditions)
        if (!cond.pass && cond.strength != Strength::Diagnostic)
          entry.failed_conditions.push_back(cond.id + "[" + cond.element + "]");
      if (c.satisfies_conditions || cfg.probe_violators) {
        entry.searched = true;
        entry.placement = search_placement(c.graph, c.action, cfg, c.id);
        if (c.satisfies_conditions && !entry.placement.found) entry.flag = ScanFlag::PossibleCounterexample;
        if (!c.satisfies_conditions && entry.placement.found) entry.flag = ScanFlag::WouldRefuteNecessity;
      }
      slots[i].emplace(std::move(entry));
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, candidates.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& s : slots) {
    auto& e = *s;
    if (e.candidate.satisfies_conditions) ++report.satisfying;
    if (e.placement.found) ++report.witnesses;
    if (e.flag == ScanFlag::PossibleCounterexample) ++report.possible_counterexamples;
    if (e.flag == ScanFlag::WouldRefuteNecessity) ++report.would_refute;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace normrig

#include "normrig/sparsity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "normrig/error.hpp"

namespace normrig {

void SparsityParams::validate() const {
  if (k < 1 || l < 0 || l >= 2 * k)
    throw Error(ErrorCode::InvalidInput, "sparsity needs k >= 1 and 0 <= l < 2k, got (" + std::to_string(k) +
                                             ", " + std::to_string(l) + ")");
}

PebbleGame::PebbleGame(std::size_t vertex_count, SparsityParams params)
    : params_(params), pebbles_(vertex_count, params.k), out_(vertex_count) {
  params_.validate();
}

std::size_t PebbleGame::free_pebbles() const {
  return static_cast<std::size_t>(std::accumulate(pebbles_.begin(), pebbles_.end(), 0));
}

bool PebbleGame::find_pebble(std::size_t root, std::size_t avoid_a, std::size_t avoid_b) {
  const auto n = out_.size();
  std::vector<std::size_t> parent(n, n);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    auto w = stack.back();
    stack.pop_back();
    if (w != avoid_a && w != avoid_b && pebbles_[w] > 0) {
      --pebbles_[w];
      ++pebbles_[root];
      while (w != root) {
        auto p = parent[w];
        auto& succ = out_[p];
        succ.erase(std::find(succ.begin(), succ.end(), w));
        out_[w].push_back(p);
        w = p;
      }
      return true;
    }
    for (auto x : out_[w]) {
      if (!seen[x]) {
        seen[x] = true;
        parent[x] = w;
        stack.push_back(x);
      }
    }
  }
  return false;
}

std::vector<std::size_t> PebbleGame::reach(std::size_t a, std::size_t b) const {
  std::vector<bool> seen(out_.size(), false);
  std::vector<std::size_t> stack{a, b};
  seen[a] = seen[b] = true;
  while (!stack.empty()) {
    auto w = stack.back();
    stack.pop_back();
    for (auto x : out_[w])
      if (!seen[x]) {
        seen[x] = true;
        stack.push_back(x);
      }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

bool PebbleGame::try_add(std::size_t u, std::size_t v) {
  if (u >= out_.size() || v >= out_.size() || u == v)
    throw Error(ErrorCode::InvalidInput, "pebble game edge out of range or a loop");
  witness_.clear();
  while (pebbles_[u] + pebbles_[v] < params_.l + 1) {
    if (pebbles_[u] < params_.k && find_pebble(u, u, v)) continue;
    if (pebbles_[v] < params_.k && find_pebble(v, u, v)) continue;
    witness_ = reach(u, v);
    return false;
  }
  if (pebbles_[u] > 0) {
    --pebbles_[u];
    out_[u].push_back(v);
  } else {
    --pebbles_[v];
    out_[v].push_back(u);
  }
  ++accepted_;
  return true;
}

SparsityResult is_sparse(const Graph& g, SparsityParams params) {
  PebbleGame game(g.vertex_count(), params);
  for (const auto& e : g.edges())
    if (!game.try_add(e.u, e.v)) return {false, game.last_witness()};
  return {};
}

bool is_tight(const Graph& g, SparsityParams params) {
  if (static_cast<long>(g.edge_count()) != params.bound(g.vertex_count())) return false;
  return is_sparse(g, params).sparse;
}

bool brute_force_sparse(const Graph& g, SparsityParams params) {
  params.validate();
  const auto n = g.vertex_count();
  if (n > 16) throw Error(ErrorCode::SizeCap, "brute-force sparsity is limited to 16 vertices");
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    long count = 0;
    for (const auto& e : g.edges())
      if ((mask >> e.u & 1UL) && (mask >> e.v & 1UL)) ++count;
    if (count > 0 && count > params.bound(static_cast<std::size_t>(__builtin_popcountl(mask)))) return false;
  }
  return true;
}

bool brute_force_tight(const Graph& g, SparsityParams params) {
  return static_cast<long>(g.edge_count()) == params.bound(g.vertex_count()) && brute_force_sparse(g, params);
}

bool decomposes_into_spanning_trees(const Graph& g, int k) {
  const auto n = g.vertex_count();
  const auto& edges = g.edges();
  if (k < 1) throw Error(ErrorCode::InvalidInput, "need at least one tree");
  if (edges.size() > 30) throw Error(ErrorCode::SizeCap, "spanning tree decomposition is limited to 30 edges");
  if (n == 0 || edges.size() != static_cast<std::size_t>(k) * (n - 1)) return false;
  using Forest = std::vector<std::size_t>;
  std::function<std::size_t(Forest&, std::size_t)> root = [&](Forest& f, std::size_t x) {
    while (f[x] != x) x = f[x];
    return x;
  };
  std::vector<Forest> forests(static_cast<std::size_t>(k), Forest(n));
  for (auto& f : forests) std::iota(f.begin(), f.end(), std::size_t{0});
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == edges.size()) return true;
    for (int c = 0; c < k; ++c) {
      if (i == 0 && c > 0) break;
      auto& f = forests[static_cast<std::size_t>(c)];
      auto a = root(f, edges[i].u);
      auto b = root(f, edges[i].v);
      if (a == b) continue;
      f[a] = b;
      if (assign(i + 1)) return true;
      f[a] = a;
    }
    return false;
  };
  return assign(0);
}

std::vector<std::vector<std::size_t>> symmetric_tight_subgraphs(const Graph& g, SparsityParams params,
                                                                const GroupAction& action) {
  auto check = is_sparse(g, params);
  if (!check.sparse)
    throw Error(ErrorCode::InvalidInput, "symmetric tight subgraphs need a sparse graph");
  if (action.vertex_count() != g.vertex_count())
    throw Error(ErrorCode::DimensionMismatch, "group action and graph differ in vertex count");
  auto orbits = action.vertex_orbits();
  if (orbits.size() > 20) throw Error(ErrorCode::SizeCap, "too many vertex orbits (limit 20)");
  std::vector<std::vector<std::size_t>> out;
  for (unsigned long mask = 1; mask < (1UL << orbits.size()); ++mask) {
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (mask >> i & 1UL) vs.insert(vs.end(), orbits[i].begin(), orbits[i].end());
    std::sort(vs.begin(), vs.end());
    if (static_cast<long>(g.induced_edge_count(vs)) == params.bound(vs.size())) out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace normrig

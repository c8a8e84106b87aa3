#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "normrig/graph.hpp"
#include "normrig/group.hpp"

namespace normrig {

/// (k, l)-sparsity: every subgraph on n' vertices has at most k n' - l edges
/// (subgraphs with at least one edge). Requires k >= 1 and 0 <= l < 2k.
struct SparsityParams {
  int k = 2;
  int l = 3;

  void validate() const;
  long bound(std::size_t n) const { return static_cast<long>(k) * static_cast<long>(n) - l; }
};

struct SparsityResult {
  bool sparse = true;
  /// When not sparse: vertex set of a subgraph with more than k n' - l edges.
  std::vector<std::size_t> witness;
};

/// Incremental (k, l) pebble game.
class PebbleGame {
 public:
  PebbleGame(std::size_t vertex_count, SparsityParams params);

  /// Adds the edge if the edge set stays (k, l)-sparse. On refusal the
  /// vertex set of a violating subgraph (including the new edge) is stored.
  bool try_add(std::size_t u, std::size_t v);
  const std::vector<std::size_t>& last_witness() const noexcept { return witness_; }
  std::size_t accepted() const noexcept { return accepted_; }
  std::size_t free_pebbles() const;

 private:
  bool find_pebble(std::size_t root, std::size_t avoid_a, std::size_t avoid_b);
  std::vector<std::size_t> reach(std::size_t a, std::size_t b) const;

  SparsityParams params_;
  std::vector<int> pebbles_;
  std::vector<std::vector<std::size_t>> out_;  // directed edges, tail -> heads
  std::vector<std::size_t> witness_;
  std::size_t accepted_ = 0;
};

SparsityResult is_sparse(const Graph& g, SparsityParams params);
bool is_tight(const Graph& g, SparsityParams params);

/// Reference check over all vertex subsets; |V| <= 16.
bool brute_force_sparse(const Graph& g, SparsityParams params);
bool brute_force_tight(const Graph& g, SparsityParams params);

/// Whether the edges split into k edge-disjoint spanning trees (small graphs,
/// exhaustive search; |E| <= 30).
bool decomposes_into_spanning_trees(const Graph& g, int k);

/// Vertex sets of the tight induced subgraphs that are unions of vertex
/// orbits of the action. `g` must be (k, l)-sparse. Each set is sorted; the
/// list is ordered by size, then lexicographically. At most 20 orbits.
std::vector<std::vector<std::size_t>> symmetric_tight_subgraphs(const Graph& g, SparsityParams params,
                                                                const GroupAction& action);

}  // namespace normrig

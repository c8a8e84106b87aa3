#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace normrig {

/// Undirected edge between vertex indices, normalised so that u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  Edge() = default;
  Edge(std::size_t a, std::size_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph. Vertices are indexed in insertion order and carry
/// string ids; the edge list is kept sorted lexicographically by (u, v), which
/// fixes the row order of every rigidity matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  explicit Graph(std::vector<std::string> ids);

  std::size_t add_vertex(std::string id);
  /// Throws on loops, duplicate edges and unknown endpoints.
  void add_edge(std::size_t a, std::size_t b);
  void add_edge(std::string_view a, std::string_view b);
  void remove_edge(std::size_t a, std::size_t b);

  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(std::size_t v) const { return ids_.at(v); }
  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;

  bool has_edge(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  /// Number of edges with both endpoints in the (sorted or unsorted) vertex set.
  std::size_t induced_edge_count(const std::vector<std::size_t>& vertices) const;

 private:
  std::vector<std::string> ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

}  // namespace normrig

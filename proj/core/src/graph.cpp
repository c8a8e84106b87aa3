#include "normrig/graph.hpp"

#include <algorithm>

#include "normrig/error.hpp"

namespace normrig {

Graph::Graph(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) add_vertex("v" + std::to_string(i));
}

Graph::Graph(std::vector<std::string> ids) {
  for (auto& id : ids) add_vertex(std::move(id));
}

std::size_t Graph::add_vertex(std::string id) {
  if (id.empty()) throw Error(ErrorCode::InvalidInput, "empty vertex id");
  if (find(id)) throw Error(ErrorCode::InvalidInput, "duplicate vertex id '" + id + "'");
  ids_.push_back(std::move(id));
  adjacency_.emplace_back();
  return ids_.size() - 1;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= ids_.size() || b >= ids_.size()) throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
  if (a == b) throw Error(ErrorCode::InvalidInput, "loop at vertex '" + ids_[a] + "'");
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e)
    throw Error(ErrorCode::InvalidInput, "duplicate edge " + ids_[a] + "-" + ids_[b]);
  edges_.insert(it, e);
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

void Graph::add_edge(std::string_view a, std::string_view b) { add_edge(index_of(a), index_of(b)); }

void Graph::remove_edge(std::size_t a, std::size_t b) {
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) throw Error(ErrorCode::InvalidInput, "no such edge");
  edges_.erase(it);
  std::erase(adjacency_[a], b);
  std::erase(adjacency_[b], a);
}

std::optional<std::size_t> Graph::find(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Graph::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw Error(ErrorCode::InvalidInput, "unknown vertex id '" + std::string(id) + "'");
  return *i;
}

bool Graph::has_edge(std::size_t a, std::size_t b) const { return edge_index(a, b).has_value(); }

std::optional<std::size_t> Graph::edge_index(std::size_t a, std::size_t b) const {
  if (a == b) return std::nullopt;
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::induced_edge_count(const std::vector<std::size_t>& vertices) const {
  std::vector<bool> in(ids_.size(), false);
  for (auto v : vertices) in.at(v) = true;
  std::size_t count = 0;
  for (const auto& e : edges_)
    if (in[e.u] && in[e.v]) ++count;
  return count;
}

}  // namespace normrig

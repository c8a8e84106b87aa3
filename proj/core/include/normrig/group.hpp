#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normrig/graph.hpp"
#include "normrig/matrix.hpp"

namespace normrig {

using Permutation = std::vector<std::size_t>;

/// A finite group given by its multiplication table, together with a vertex
/// action theta and a linear representation tau.
///
/// `table[a][b]` is the product a*b, read as maps: b is applied first, so
/// theta(a*b) = theta(a) o theta(b) and tau(a*b) = tau(a) tau(b).
class GroupAction {
 public:
  GroupAction(std::string name, std::vector<std::string> elements,
              std::vector<std::vector<std::size_t>> table, std::vector<Permutation> theta,
              std::vector<Matrix> tau);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& element_name(std::size_t g) const { return elements_.at(g); }
  std::optional<std::size_t> find(const std::string& element) const;
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

  std::size_t identity() const noexcept { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }
  std::size_t inverse(std::size_t g) const;
  std::size_t element_order(std::size_t g) const;

  const Permutation& theta(std::size_t g) const { return theta_.at(g); }
  std::size_t image(std::size_t g, std::size_t v) const { return theta_.at(g).at(v); }
  Edge image(std::size_t g, const Edge& e) const { return {image(g, e.u), image(g, e.v)}; }
  const Matrix& tau(std::size_t g) const { return tau_.at(g); }
  std::size_t vertex_count() const noexcept { return theta_.empty() ? 0 : theta_.front().size(); }
  int dim() const noexcept { return tau_.empty() ? 0 : static_cast<int>(tau_.front().rows()); }
  bool exact_data() const;

  /// Elements of the cyclic subgroup generated by g, starting with the identity.
  std::vector<std::size_t> cyclic_subgroup(std::size_t g) const;
  /// The action restricted to a subgroup (given as element indices).
  GroupAction restricted(const std::vector<std::size_t>& subgroup, const std::string& name) const;
  /// Vertex orbits, each sorted, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> vertex_orbits() const;
  /// Elements g with g v = v.
  std::vector<std::size_t> stabilizer(std::size_t v) const;

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<Permutation> theta_;
  std::vector<Matrix> tau_;
  std::size_t identity_ = 0;
};

/// Checks that theta is a homomorphism into Aut(G) and tau a homomorphism.
/// Returns a description of the first failure, or nullopt.
std::optional<std::string> check_action_on_graph(const GroupAction& action, const Graph& g,
                                                 double tol = kDefaultTolerance);

/// A group with its default linear representation but no vertex action yet.
struct GroupTemplate {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;
  std::vector<Matrix> tau;
  std::vector<std::string> generators;

  std::optional<std::size_t> find(const std::string& element) const;
};

/// Closes a set of named generator matrices into a group. Elements are named
/// by words in the generators ("e", "r", "r2", "s", "rs", ...).
GroupTemplate generate_group(const std::string& name, std::size_t dim,
                             const std::vector<std::pair<std::string, Matrix>>& generators,
                             double tol = kDefaultTolerance);

/// Schoenflies groups with a fixed default orientation:
///   2D: c1, cs (mirror x = 0), cs_diag (mirror y = x), c2, c3, c4, c6,
///       c2v (mirrors in the axes), c2v_diag (mirrors y = +-x), c4v
///   3D: c1_3d, ci, cs_xy, c2_z, c3_z, c3h, s4, s6
std::optional<GroupTemplate> builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

/// Fills in theta for every element from the permutations given for a
/// generating subset, using the multiplication table.
std::vector<Permutation> complete_theta(const GroupTemplate& group,
                                        const std::map<std::string, Permutation>& known,
                                        std::size_t vertex_count);

GroupAction make_action(const GroupTemplate& group, std::vector<Permutation> theta);

}  // namespace normrig

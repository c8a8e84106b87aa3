#include "normrig/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "normrig/error.hpp"

namespace normrig {

namespace {

constexpr std::size_t kMaxGroupOrder = 240;

bool is_permutation_of(const Permutation& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto x : p) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) out[v] = a[b[v]];
  return out;
}

std::string word_name(const std::vector<std::string>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    out += word[i];
    if (j - i > 1) out += std::to_string(j - i);
    i = j;
  }
  return out;
}

Real half_sqrt3() { return Real::inexact(0.86602540378443864676); }

Matrix rot2(const Real& c, const Real& s) {
  return Matrix::from_rows({{c, -s}, {s, c}});
}

Matrix rot3z(const Real& c, const Real& s, int z) {
  return Matrix::from_rows({{c, -s, 0}, {s, c, 0}, {0, 0, z}});
}

Matrix diag(std::vector<int> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

GroupAction::GroupAction(std::string name, std::vector<std::string> elements,
                         std::vector<std::vector<std::size_t>> table, std::vector<Permutation> theta,
                         std::vector<Matrix> tau)
    : name_(std::move(name)),
      elements_(std::move(elements)),
      table_(std::move(table)),
      theta_(std::move(theta)),
      tau_(std::move(tau)) {
  const std::size_t n = elements_.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "group has no elements");
  std::set<std::string> names(elements_.begin(), elements_.end());
  if (names.size() != n) throw Error(ErrorCode::InvalidInput, "duplicate group element names");
  if (table_.size() != n) throw Error(ErrorCode::InvalidInput, "multiplication table has wrong size");
  for (const auto& row : table_) {
    if (!is_permutation_of(row, n))
      throw Error(ErrorCode::InvalidInput, "multiplication table row is not a permutation (not a group)");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::InvalidInput, "multiplication table has no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error(ErrorCode::InvalidInput, "multiplication table is not associative");

  if (theta_.size() != n) throw Error(ErrorCode::InvalidInput, "theta must be given for every element");
  const std::size_t nv = theta_.front().size();
  for (const auto& p : theta_)
    if (!is_permutation_of(p, nv)) throw Error(ErrorCode::InvalidInput, "theta is not a vertex permutation");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (theta_[table_[a][b]] != compose(theta_[a], theta_[b]))
        throw Error(ErrorCode::InvalidInput, "theta is not a homomorphism at (" + elements_[a] + ", " +
                                                 elements_[b] + ")");
  if (tau_.size() != n) throw Error(ErrorCode::InvalidInput, "tau must be given for every element");
  const std::size_t d = tau_.front().rows();
  for (const auto& m : tau_)
    if (m.rows() != d || m.cols() != d)
      throw Error(ErrorCode::DimensionMismatch, "tau matrices must be square of equal size");
}

std::optional<std::size_t> GroupAction::find(const std::string& element) const {
  auto it = std::find(elements_.begin(), elements_.end(), element);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t GroupAction::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < order(); ++h)
    if (table_[g][h] == identity_) return h;
  throw Error(ErrorCode::InvalidInput, "element without inverse");
}

std::size_t GroupAction::element_order(std::size_t g) const {
  std::size_t k = 1;
  for (std::size_t x = g; x != identity_; x = table_[g][x]) ++k;
  return k;
}

bool GroupAction::exact_data() const {
  return std::all_of(tau_.begin(), tau_.end(), [](const Matrix& m) { return m.all_exact(); });
}

std::vector<std::size_t> GroupAction::cyclic_subgroup(std::size_t g) const {
  std::vector<std::size_t> out{identity_};
  for (std::size_t x = g; x != identity_; x = table_[g][x]) out.push_back(x);
  return out;
}

GroupAction GroupAction::restricted(const std::vector<std::size_t>& subgroup,
                                    const std::string& name) const {
  std::vector<std::size_t> index(order(), order());
  for (std::size_t i = 0; i < subgroup.size(); ++i) index.at(subgroup[i]) = i;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(subgroup.size(), std::vector<std::size_t>(subgroup.size()));
  std::vector<Permutation> theta;
  std::vector<Matrix> tau;
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    names.push_back(elements_[subgroup[i]]);
    theta.push_back(theta_[subgroup[i]]);
    tau.push_back(tau_[subgroup[i]]);
    for (std::size_t j = 0; j < subgroup.size(); ++j) {
      std::size_t k = index[table_[subgroup[i]][subgroup[j]]];
      if (k == order()) throw Error(ErrorCode::InvalidInput, "element set is not a subgroup");
      table[i][j] = k;
    }
  }
  return GroupAction(name, std::move(names), std::move(table), std::move(theta), std::move(tau));
}

std::vector<std::vector<std::size_t>> GroupAction::vertex_orbits() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(vertex_count(), false);
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (seen[v]) continue;
    std::set<std::size_t> orbit;
    for (const auto& p : theta_) orbit.insert(p[v]);
    for (auto w : orbit) seen[w] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::vector<std::size_t> GroupAction::stabilizer(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < order(); ++g)
    if (theta_[g][v] == v) out.push_back(g);
  return out;
}

std::optional<std::string> check_action_on_graph(const GroupAction& action, const Graph& g, double tol) {
  if (action.vertex_count() != g.vertex_count())
    return "theta acts on " + std::to_string(action.vertex_count()) + " vertices, graph has " +
           std::to_string(g.vertex_count());
  const auto n = action.order();
  if (!is_identity(action.tau(action.identity()), tol)) return "tau(identity) is not the identity";
  if (!std::is_sorted(action.theta(action.identity()).begin(), action.theta(action.identity()).end()))
    return "theta(identity) is not the identity";
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& e : g.edges()) {
      Edge f = action.image(a, e);
      if (!g.has_edge(f.u, f.v))
        return "theta(" + action.element_name(a) + ") maps edge " + g.id(e.u) + g.id(e.v) +
               " to a non-edge";
    }
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = action.multiply(a, b);
      if (action.theta(ab) != compose(action.theta(a), action.theta(b)))
        return "theta is not a homomorphism at (" + action.element_name(a) + ", " +
               action.element_name(b) + ")";
      if (!near(action.tau(ab), action.tau(a) * action.tau(b), tol))
        return "tau is not a homomorphism at (" + action.element_name(a) + ", " +
               action.element_name(b) + ")";
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> GroupTemplate::find(const std::string& element) const {
  auto it = std::find(elements.begin(), elements.end(), element);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

GroupTemplate generate_group(const std::string& name, std::size_t d,
                             const std::vector<std::pair<std::string, Matrix>>& generators,
                             double tol) {
  for (const auto& [gname, m] : generators)
    if (m.rows() != d || m.cols() != d)
      throw Error(ErrorCode::DimensionMismatch, "generator " + gname + " is not " + std::to_string(d) + "x" +
                                                    std::to_string(d));
  GroupTemplate out;
  out.name = name;
  std::vector<std::vector<std::string>> words{{}};
  out.tau.push_back(Matrix::identity(d));
  auto locate = [&](const Matrix& m) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < out.tau.size(); ++i)
      if (near(out.tau[i], m, tol)) return i;
    return std::nullopt;
  };
  for (std::size_t i = 0; i < out.tau.size(); ++i) {
    for (const auto& [gname, m] : generators) {
      Matrix y = out.tau[i] * m;
      if (locate(y)) continue;
      if (out.tau.size() >= kMaxGroupOrder)
        throw Error(ErrorCode::NotFiniteOrder, "generators of " + name + " do not close to a finite group");
      out.tau.push_back(y);
      auto w = words[i];
      w.push_back(gname);
      words.push_back(std::move(w));
    }
  }
  for (const auto& w : words) out.elements.push_back(word_name(w));
  const auto n = out.tau.size();
  out.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.table[a][b] = *locate(out.tau[a] * out.tau[b]);
  for (const auto& g : generators) out.generators.push_back(g.first);
  return out;
}

std::optional<GroupTemplate> builtin_group(const std::string& name) {
  const Real h(1, 2);
  const Real s3 = half_sqrt3();
  const Matrix mirror_y = Matrix::from_rows({{-1, 0}, {0, 1}});
  const Matrix mirror_x = Matrix::from_rows({{1, 0}, {0, -1}});
  const Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
  const Matrix r90 = rot2(0, 1);
  if (name == "c1") return generate_group(name, 2, {});
  if (name == "cs") return generate_group(name, 2, {{"s", mirror_y}});
  if (name == "cs_diag") return generate_group(name, 2, {{"s", swap}});
  if (name == "c2") return generate_group(name, 2, {{"r", diag({-1, -1})}});
  if (name == "c3") return generate_group(name, 2, {{"r", rot2(-h, s3)}});
  if (name == "c4") return generate_group(name, 2, {{"r", r90}});
  if (name == "c6") return generate_group(name, 2, {{"r", rot2(h, s3)}});
  if (name == "c2v") return generate_group(name, 2, {{"r", diag({-1, -1})}, {"s", mirror_x}});
  if (name == "c2v_diag") return generate_group(name, 2, {{"r", diag({-1, -1})}, {"s", swap}});
  if (name == "c4v") return generate_group(name, 2, {{"r", r90}, {"s", mirror_x}});
  if (name == "c1_3d") return generate_group(name, 3, {});
  if (name == "ci") return generate_group(name, 3, {{"i", diag({-1, -1, -1})}});
  if (name == "cs_xy") return generate_group(name, 3, {{"s", diag({1, 1, -1})}});
  if (name == "c2_z") return generate_group(name, 3, {{"r", diag({-1, -1, 1})}});
  if (name == "c3_z") return generate_group(name, 3, {{"r", rot3z(-h, s3, 1)}});
  if (name == "c3h") return generate_group(name, 3, {{"r", rot3z(-h, s3, 1)}, {"s", diag({1, 1, -1})}});
  if (name == "s4") return generate_group(name, 3, {{"r", rot3z(0, 1, -1)}});
  if (name == "s6") return generate_group(name, 3, {{"r", rot3z(h, s3, -1)}});
  return std::nullopt;
}

std::vector<std::string> builtin_group_names() {
  return {"c1",  "cs",    "cs_diag", "c2",    "c3",   "c4",   "c6",  "c2v", "c2v_diag",
          "c4v", "c1_3d", "ci",      "cs_xy", "c2_z", "c3_z", "c3h", "s4",  "s6"};
}

std::vector<Permutation> complete_theta(const GroupTemplate& group,
                                        const std::map<std::string, Permutation>& known,
                                        std::size_t vertex_count) {
  const auto n = group.elements.size();
  std::vector<std::optional<Permutation>> theta(n);
  Permutation id(vertex_count);
  std::iota(id.begin(), id.end(), std::size_t{0});
  theta[0] = id;
  std::vector<std::size_t> given;
  for (const auto& [name, p] : known) {
    auto idx = group.find(name);
    if (!idx) throw Error(ErrorCode::InvalidInput, "unknown group element '" + name + "' in " + group.name);
    if (!is_permutation_of(p, vertex_count))
      throw Error(ErrorCode::InvalidInput, "theta(" + name + ") is not a permutation of the vertices");
    theta[*idx] = p;
    given.push_back(*idx);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!theta[a]) continue;
      for (auto k : given) {
        auto ak = group.table[a][k];
        if (!theta[ak]) {
          theta[ak] = compose(*theta[a], *theta[k]);
          changed = true;
        }
      }
    }
  }
  std::vector<Permutation> out;
  for (std::size_t a = 0; a < n; ++a) {
    if (!theta[a])
      throw Error(ErrorCode::InvalidInput,
                  "theta is not determined for element '" + group.elements[a] + "'; give it for generators");
    out.push_back(*theta[a]);
  }
  return out;
}

GroupAction make_action(const GroupTemplate& group, std::vector<Permutation> theta) {
  return GroupAction(group.name, group.elements, group.table, std::move(theta), group.tau);
}

}  // namespace normrig

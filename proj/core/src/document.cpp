#include "normrig/document.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "normrig/error.hpp"

namespace normrig {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, (where.empty() ? "/" : where) + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing \"" + key + "\"");
  return *it;
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Real scalar(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Real::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Real(j.get<long>());
  if (j.is_number_float()) return Real::inexact(j.get<double>());
  fail(where, "expected a number or a rational string");
}

Vector vector_of(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  Vector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar(j[i], where + "/" + std::to_string(i)));
  return out;
}

Matrix matrix_of(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vector_of(j[i], where + "/" + std::to_string(i)));
  for (const auto& r : rows)
    if (r.size() != rows.size()) fail(where, "expected a square matrix");
  return Matrix::from_rows(rows);
}

json scalar_json(const Real& r) {
  if (r.is_exact()) return r.str();
  return r.to_double();
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

int dim_of(const json& j, const std::string& where) {
  const auto& d = member(j, "dim", where);
  if (!d.is_number_integer()) fail(where + "/dim", "expected an integer");
  return d.get<int>();
}

NormSpec norm_from_json(const json& j, const std::string& where, std::string& name) {
  try {
    if (j.is_string()) {
      name = j.get<std::string>();
      auto n = builtin_norm(name);
      if (!n) fail(where, "unknown builtin norm \"" + name + "\"");
      return *n;
    }
    name.clear();
    const auto type = text(member(j, "type", where), where + "/type");
    if (type == "l2") return NormSpec::euclidean(dim_of(j, where));
    if (type == "l1") return NormSpec::l1(dim_of(j, where));
    if (type == "linf") return NormSpec::linf(dim_of(j, where));
    if (type == "lq") return NormSpec::lq(dim_of(j, where), scalar(member(j, "q", where), where + "/q"));
    if (type == "polyhedral") {
      const auto& f = member(j, "facets", where);
      if (!f.is_array()) fail(where + "/facets", "expected an array");
      std::vector<Covector> facets;
      for (std::size_t i = 0; i < f.size(); ++i)
        facets.push_back(vector_of(f[i], where + "/facets/" + std::to_string(i)));
      return NormSpec::polyhedral(dim_of(j, where), std::move(facets));
    }
    if (type == "ball") {
      const auto& f = member(j, "vertices", where);
      if (!f.is_array()) fail(where + "/vertices", "expected an array");
      std::vector<Vector> pts;
      for (std::size_t i = 0; i < f.size(); ++i)
        pts.push_back(vector_of(f[i], where + "/vertices/" + std::to_string(i)));
      return NormSpec::from_ball_vertices(dim_of(j, where), pts);
    }
    fail(where + "/type", "unknown norm type \"" + type + "\"");
  } catch (const Error& e) {
    if (std::string(e.what()).rfind(where, 0) == 0) throw;
    fail(where, e.what());
  }
}

json norm_json(const AnalysisDocument& doc) {
  if (!doc.norm_name.empty()) return doc.norm_name;
  const auto& n = doc.norm;
  json out;
  switch (n.source()) {
    case NormSource::L2: out["type"] = "l2"; break;
    case NormSource::L1: out["type"] = "l1"; break;
    case NormSource::LInf: out["type"] = "linf"; break;
    case NormSource::LQ:
      out["type"] = "lq";
      out["q"] = scalar_json(n.q());
      break;
    case NormSource::Polyhedral: {
      out["type"] = "polyhedral";
      json f = json::array();
      for (const auto& c : n.facets()) f.push_back(vector_json(c));
      out["facets"] = f;
      break;
    }
  }
  out["dim"] = n.dim();
  return out;
}

std::vector<Matrix> complete_tau(const std::vector<std::string>& elements,
                                 const std::vector<std::vector<std::size_t>>& table,
                                 std::map<std::size_t, Matrix> known, std::size_t d, const std::string& where) {
  const auto n = elements.size();
  std::vector<std::optional<Matrix>> tau(n);
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a;
    if (ok) identity = e;
  }
  if (identity == n) fail(where, "multiplication table has no identity");
  tau[identity] = Matrix::identity(d);
  for (auto& [e, m] : known) {
    if (m.rows() != d) fail(where + "/tau/" + elements[e], "matrix size does not match the norm dimension");
    tau[e] = m;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!tau[a]) continue;
      for (const auto& [k, m] : known) {
        auto ak = table[a][k];
        if (!tau[ak]) {
          tau[ak] = *tau[a] * m;
          changed = true;
        }
      }
    }
  }
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < n; ++a) {
    if (!tau[a]) fail(where + "/tau", "tau is not determined for element \"" + elements[a] + "\"");
    out.push_back(*tau[a]);
  }
  return out;
}

GroupAction group_from_json(const json& j, const std::string& where, const Graph& graph, int dim,
                            std::string& builtin_name) {
  if (!j.is_object()) fail(where, "expected an object");
  GroupTemplate tmpl;
  const bool has_elements = j.contains("elements");
  std::string bname;
  if (j.contains("builtin")) bname = text(j["builtin"], where + "/builtin");
  else if (!has_elements && j.contains("name")) bname = text(j["name"], where + "/name");
  if (!bname.empty()) {
    auto b = builtin_group(bname);
    if (!b) fail(where, "unknown builtin group \"" + bname + "\"");
    tmpl = *b;
    builtin_name = bname;
  } else {
    builtin_name.clear();
    tmpl.name = j.contains("name") ? text(j["name"], where + "/name") : "group";
    const auto& el = member(j, "elements", where);
    if (!el.is_array() || el.empty()) fail(where + "/elements", "expected a non-empty array");
    for (std::size_t i = 0; i < el.size(); ++i) tmpl.elements.push_back(text(el[i], where + "/elements/" + std::to_string(i)));
    const auto& tb = member(j, "table", where);
    if (!tb.is_array() || tb.size() != tmpl.elements.size()) fail(where + "/table", "expected one row per element");
    for (std::size_t a = 0; a < tb.size(); ++a) {
      const auto w = where + "/table/" + std::to_string(a);
      if (!tb[a].is_array() || tb[a].size() != tmpl.elements.size()) fail(w, "expected one entry per element");
      std::vector<std::size_t> row;
      for (std::size_t b = 0; b < tb[a].size(); ++b) {
        const auto& x = tb[a][b];
        if (x.is_number_unsigned() && x.get<std::size_t>() < tmpl.elements.size()) row.push_back(x.get<std::size_t>());
        else if (x.is_string() && tmpl.find(x.get<std::string>())) row.push_back(*tmpl.find(x.get<std::string>()));
        else fail(w + "/" + std::to_string(b), "unknown element");
      }
      tmpl.table.push_back(std::move(row));
    }
  }
  const auto d = static_cast<std::size_t>(dim);
  if (j.contains("tau")) {
    const auto& t = j["tau"];
    if (!t.is_object()) fail(where + "/tau", "expected an object keyed by element");
    std::map<std::size_t, Matrix> known;
    for (auto it = t.begin(); it != t.end(); ++it) {
      auto idx = tmpl.find(it.key());
      if (!idx) fail(where + "/tau/" + it.key(), "unknown element");
      known.emplace(*idx, matrix_of(it.value(), where + "/tau/" + it.key()));
    }
    tmpl.tau = complete_tau(tmpl.elements, tmpl.table, std::move(known), d, where);
  } else if (tmpl.tau.empty()) {
    fail(where, "missing \"tau\"");
  }
  for (const auto& m : tmpl.tau)
    if (m.rows() != d) fail(where + "/tau", "group acts in dimension " + std::to_string(m.rows()) +
                                                ", the norm has dimension " + std::to_string(dim));
  std::map<std::string, Permutation> theta;
  const auto& th = member(j, "theta", where);
  if (!th.is_object()) fail(where + "/theta", "expected an object keyed by element");
  for (auto it = th.begin(); it != th.end(); ++it) {
    const auto w = where + "/theta/" + it.key();
    if (!tmpl.find(it.key())) fail(w, "unknown element");
    if (!it.value().is_object()) fail(w, "expected a vertex map");
    Permutation p(graph.vertex_count());
    for (std::size_t v = 0; v < p.size(); ++v) p[v] = v;
    for (auto m = it.value().begin(); m != it.value().end(); ++m) {
      auto from = graph.find(m.key());
      if (!from) fail(w + "/" + m.key(), "unknown vertex");
      auto to = graph.find(text(m.value(), w + "/" + m.key()));
      if (!to) fail(w + "/" + m.key(), "unknown vertex \"" + m.value().get<std::string>() + "\"");
      p[*from] = *to;
    }
    theta.emplace(it.key(), std::move(p));
  }
  try {
    return make_action(tmpl, complete_theta(tmpl, theta, graph.vertex_count()));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

json group_json(const GroupAction& g, const Graph& graph) {
  json out;
  out["name"] = g.name();
  out["elements"] = g.elements();
  json table = json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.element_name(g.multiply(a, b)));
    table.push_back(row);
  }
  out["table"] = table;
  json tau = json::object();
  for (std::size_t a = 0; a < g.order(); ++a) tau[g.element_name(a)] = matrix_json(g.tau(a));
  out["tau"] = tau;
  json theta = json::object();
  for (std::size_t a = 0; a < g.order(); ++a) {
    json m = json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (g.image(a, v) != v) m[graph.id(v)] = graph.id(g.image(a, v));
    theta[g.element_name(a)] = m;
  }
  out["theta"] = theta;
  return out;
}

}  // namespace

std::optional<NormSpec> builtin_norm(const std::string& name) {
  if (name == "l1_2") return NormSpec::l1(2);
  if (name == "l2_2") return NormSpec::euclidean(2);
  if (name == "linf2") return NormSpec::linf(2);
  if (name == "l1_3") return NormSpec::l1(3);
  if (name == "l2_3") return NormSpec::euclidean(3);
  if (name == "linf3") return NormSpec::linf(3);
  if (name == "hexprism3") return NormSpec::hexagonal_prism();
  return std::nullopt;
}

NormSpec parse_norm(const std::string& name_or_json) {
  if (auto n = builtin_norm(name_or_json)) return *n;
  json j;
  try {
    j = json::parse(name_or_json);
  } catch (const json::parse_error&) {
    throw Error(ErrorCode::InvalidInput, "unknown norm \"" + name_or_json + "\"");
  }
  std::string name;
  if (j.is_object() && j.contains("norm")) return norm_from_json(j["norm"], "/norm", name);
  return norm_from_json(j, "", name);
}

AnalysisDocument parse_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("", "expected an object");
  AnalysisDocument doc;
  doc.norm = norm_from_json(member(j, "norm", ""), "/norm", doc.norm_name);

  if (j.contains("options")) {
    const auto& o = j["options"];
    if (!o.is_object()) fail("/options", "expected an object");
    if (o.contains("backend")) {
      auto b = text(o["backend"], "/options/backend");
      if (b == "exact") doc.options.backend = Backend::Exact;
      else if (b == "float") doc.options.backend = Backend::Float;
      else fail("/options/backend", "expected \"exact\" or \"float\"");
    }
    if (o.contains("tolerance")) {
      if (!o["tolerance"].is_number() || o["tolerance"].get<double>() <= 0)
        fail("/options/tolerance", "expected a positive number");
      doc.options.tolerance = o["tolerance"].get<double>();
    }
    if (o.contains("seed")) {
      if (!o["seed"].is_number_unsigned()) fail("/options/seed", "expected a non-negative integer");
      doc.options.seed = o["seed"].get<std::uint64_t>();
    }
  }

  if (!j.contains("vertices")) {
    if (j.contains("edges") || j.contains("group")) fail("", "missing \"vertices\"");
    return doc;
  }
  const auto& vs = j["vertices"];
  if (!vs.is_array()) fail("/vertices", "expected an array");
  Graph graph;
  std::vector<Vector> points;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto w = "/vertices/" + std::to_string(i);
    auto id = text(member(vs[i], "id", w), w + "/id");
    if (graph.find(id)) fail(w + "/id", "duplicate vertex id \"" + id + "\"");
    graph.add_vertex(id);
    auto p = vector_of(member(vs[i], "point", w), w + "/point");
    if (p.size() != static_cast<std::size_t>(doc.norm.dim()))
      fail(w + "/point", "expected " + std::to_string(doc.norm.dim()) + " coordinates");
    points.push_back(std::move(p));
  }
  if (j.contains("edges")) {
    const auto& es = j["edges"];
    if (!es.is_array()) fail("/edges", "expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto w = "/edges/" + std::to_string(i);
      if (!es[i].is_array() || es[i].size() != 2) fail(w, "expected a pair of vertex ids");
      auto a = text(es[i][0], w + "/0"), b = text(es[i][1], w + "/1");
      if (!graph.find(a)) fail(w + "/0", "unknown vertex \"" + a + "\"");
      if (!graph.find(b)) fail(w + "/1", "unknown vertex \"" + b + "\"");
      try {
        graph.add_edge(a, b);
      } catch (const Error& e) {
        fail(w, e.what());
      }
    }
  }
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (near(points[a], points[b]))
        fail("/vertices/" + std::to_string(b), "placement not injective: \"" + graph.id(a) + "\" and \"" +
                                                   graph.id(b) + "\" coincide");
  doc.framework.emplace(graph, std::move(points), doc.norm);
  if (j.contains("group")) doc.group = group_from_json(j["group"], "/group", graph, doc.norm.dim(), doc.group_builtin);
  return doc;
}

AnalysisDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string serialize_document(const AnalysisDocument& doc) {
  json out;
  out["norm"] = norm_json(doc);
  if (doc.framework) {
    const auto& fw = *doc.framework;
    json vs = json::array();
    for (std::size_t v = 0; v < fw.graph().vertex_count(); ++v)
      vs.push_back({{"id", fw.graph().id(v)}, {"point", vector_json(fw.point(v))}});
    out["vertices"] = vs;
    json es = json::array();
    for (const auto& e : fw.graph().edges()) es.push_back({fw.graph().id(e.u), fw.graph().id(e.v)});
    out["edges"] = es;
    if (doc.group) out["group"] = group_json(*doc.group, fw.graph());
  }
  json opts = json::object();
  if (doc.options.backend) opts["backend"] = to_string(*doc.options.backend);
  if (doc.options.tolerance) opts["tolerance"] = *doc.options.tolerance;
  if (doc.options.seed) opts["seed"] = *doc.options.seed;
  if (!opts.empty()) out["options"] = opts;
  return out.dump(2) + "\n";
}

}  // namespace normrig

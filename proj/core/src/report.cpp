#include "normrig/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "normrig/error.hpp"
#include "normrig/polyhedral.hpp"
#include "normrig/symmetry.hpp"

namespace normrig {

namespace {

using json = nlohmann::ordered_json;

json scalar_json(const Real& r) {
  if (r.is_exact()) return r.str();
  return r.to_double();
}

json edge_json(const Graph& g, const Edge& e) { return json::array({g.id(e.u), g.id(e.v)}); }

json ids_json(const Graph& g, const std::vector<std::size_t>& vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(g.id(v));
  return out;
}

const Framework& require_framework(const AnalysisDocument& doc) {
  if (!doc.framework) throw Error(ErrorCode::InvalidInput, "document has no framework");
  return *doc.framework;
}

ScalarContext context_for(const AnalysisDocument& doc, const RunOptions& opt) {
  ScalarContext c;
  c.tolerance = opt.tolerance.value_or(doc.options.tolerance.value_or(kDefaultTolerance));
  auto b = opt.backend ? opt.backend : doc.options.backend;
  c = resolve_context(doc.framework ? doc.framework->exact_data() : doc.norm.exact_data(), b, c.tolerance);
  return c;
}

json provenance(const ScalarContext& ctx, std::optional<std::uint64_t> seed) {
  json p;
  p["backend"] = to_string(ctx.backend);
  p["tolerance"] = ctx.tolerance;
  p["seed"] = seed ? json(*seed) : json(nullptr);
  return p;
}

json verdict_json(const Framework& fw, const RigidityVerdict& v) {
  const auto& g = fw.graph();
  json out;
  out["verdict"] = to_string(v.verdict);
  out["vertices"] = v.vertices;
  out["edges"] = v.edges;
  out["dim"] = fw.dim();
  out["norm"] = fw.norm().describe();
  out["rank"] = v.rank;
  out["dim_flex"] = v.dim_flex;
  out["dim_trivial"] = v.dim_trivial;
  out["rows_independent"] = v.rows_independent;
  json bad = json::array();
  for (const auto& e : v.bad_edges) bad.push_back(edge_json(g, e));
  out["bad_edges"] = bad;
  return out;
}

json counts_json(const Framework& fw, const RigidityVerdict& v) {
  json out = json::array();
  for (const auto& c : v.maxwell_report) {
    json j;
    j["id"] = c.id;
    j["statement"] = c.statement;
    j["applicable"] = c.applicable;
    j["evaluated"] = c.evaluated;
    j["status"] = c.pass ? "pass" : "fail";
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["witness"] = ids_json(fw.graph(), c.witness);
    out.push_back(j);
  }
  return out;
}

json rules_json(const RuleReport& r) {
  json out = json::array();
  for (const auto& c : r.checks) {
    json j;
    j["element"] = c.element;
    j["operation"] = c.op;
    j["rule"] = c.rule;
    j["statement"] = c.statement;
    j["status"] = c.pass ? "pass" : "fail";
    j["v_fixed"] = c.v_fixed;
    j["e_fixed"] = c.e_fixed;
    out.push_back(j);
  }
  return out;
}

json conditions_json(const Graph& g, const ConditionReport& r) {
  json out;
  out["group_type"] = r.group_type;
  json fa = json::object();
  for (const auto& [el, a] : r.facet_actions) fa[el] = to_string(a);
  out["facet_actions"] = fa;
  json cs = json::array();
  for (const auto& c : r.conditions) {
    json j;
    j["id"] = c.id;
    j["statement"] = c.statement;
    j["element"] = c.element;
    j["status"] = c.pass ? "pass" : "fail";
    j["strength"] = to_string(c.strength);
    j["witness"] = ids_json(g, c.witness);
    cs.push_back(j);
  }
  out["conditions"] = cs;
  out["proven_pass"] = r.proven_pass();
  out["conjectured_pass"] = r.conjectured_pass();
  return out;
}

json coloring_json(const ColoredGraph& cg) {
  json out;
  out["label_count"] = cg.label_count;
  json labels = json::array();
  for (std::size_t i = 0; i < cg.labels.size(); ++i)
    labels.push_back({{"edge", edge_json(cg.graph, cg.graph.edges()[i])}, {"label", cg.labels[i]},
                      {"facet", cg.facets[i]}});
  out["edges"] = labels;
  json mono = json::array();
  for (std::size_t l = 0; l < cg.label_count; ++l) {
    json m = json::array();
    for (const auto& e : cg.monochrome(static_cast<int>(l))) m.push_back(edge_json(cg.graph, e));
    mono.push_back(m);
  }
  out["monochrome"] = mono;
  return out;
}

Report finish(json j, int exit_code) {
  j["status"] = exit_code == 0 ? "pass" : (exit_code == 1 ? "fail" : "error");
  j["exit_code"] = exit_code;
  Report r;
  r.json = j.dump(2) + "\n";
  r.text = render_text(r.json);
  r.exit_code = exit_code;
  return r;
}

Report analyze(const AnalysisDocument& doc, const RunOptions& opt) {
  const auto& fw = require_framework(doc);
  auto ctx = context_for(doc, opt);
  auto v = classify_rigidity(fw, ctx.backend, ctx.tolerance);
  json j;
  j["command"] = "analyze";
  j["provenance"] = provenance(v.context, doc.options.seed);
  j["verdict"] = verdict_json(fw, v);
  j["counts"] = counts_json(fw, v);
  bool ok = std::all_of(v.maxwell_report.begin(), v.maxwell_report.end(),
                        [](const CountCheck& c) { return !c.applicable || !c.evaluated || c.pass; });
  return finish(j, ok ? 0 : 1);
}

Report symmetry(const AnalysisDocument& doc, const RunOptions& opt) {
  const auto& fw = require_framework(doc);
  if (!doc.group) throw Error(ErrorCode::InvalidInput, "symmetry needs a \"group\" in the document");
  const auto& action = *doc.group;
  auto ctx = context_for(doc, opt);
  json j;
  j["command"] = "symmetry";
  j["provenance"] = provenance(ctx, doc.options.seed);
  auto valid = validate_symmetric_framework(fw, action, ctx.tolerance);
  json vj;
  vj["ok"] = valid.ok;
  vj["message"] = valid.message;
  vj["element"] = valid.element ? json(action.element_name(*valid.element)) : json(nullptr);
  vj["vertex"] = valid.vertex ? json(fw.graph().id(*valid.vertex)) : json(nullptr);
  j["validation"] = vj;
  if (!valid.ok) return finish(j, 1);

  auto v = classify_rigidity(fw, ctx.backend, ctx.tolerance);
  j["verdict"] = verdict_json(fw, v);
  bool ok = true;
  json sj;
  sj["group"] = action.name();
  sj["order"] = action.order();
  if (fw.norm().has_finite_isometry_group()) {
    json rows = json::array();
    for (const auto& r : character_table(fw, action, ctx.tolerance)) {
      json row;
      row["element"] = r.element;
      row["class"] = r.op.symbol();
      row["kind"] = to_string(r.op.kind);
      row["order"] = r.op.order;
      row["v_fixed"] = r.v_fixed;
      row["e_fixed"] = r.e_fixed;
      row["chi_pe"] = r.chi_pe;
      row["chi_tau_pv"] = scalar_json(r.chi_tau_pv);
      row["chi_trivial"] = scalar_json(r.chi_trivial);
      row["matches_table"] = r.matches_table;
      ok = ok && r.matches_table;
      rows.push_back(row);
    }
    sj["characters"] = rows;
    auto counts = symmetric_count_check(fw, action, ctx.tolerance);
    auto chars = character_equation_check(fw, action, ctx.tolerance);
    sj["count_checks"] = rules_json(counts);
    sj["character_checks"] = rules_json(chars);
    ok = ok && counts.pass() && chars.pass();
  } else {
    sj["characters"] = nullptr;
    sj["note"] = "infinite isometry group: character and fixed-count rules not evaluated";
  }
  if (well_positioned(fw, ctx.tolerance).ok) sj["intertwining_residual"] = intertwining_check(fw, action, ctx.tolerance);
  else sj["intertwining_residual"] = nullptr;
  j["symmetry"] = sj;
  if (fw.norm().is_quadrilateral()) {
    auto qc = quadrilateral_conditions(fw, action, ctx.tolerance);
    j["polyhedral"] = conditions_json(fw.graph(), qc);
    ok = ok && qc.proven_pass() && qc.diagnostics_pass();
  }
  return finish(j, ok ? 0 : 1);
}

Report color(const AnalysisDocument& doc, const RunOptions& opt) {
  const auto& fw = require_framework(doc);
  auto ctx = context_for(doc, opt);
  auto cg = edge_colors(fw, ctx.tolerance);
  json j;
  j["command"] = "color";
  j["provenance"] = provenance(ctx, doc.options.seed);
  json pj = coloring_json(cg);
  int code = 0;
  const bool applicable = opt.experimental_trees ? cg.label_count == static_cast<std::size_t>(cg.dim)
                                                 : fw.norm().is_quadrilateral();
  if (applicable) {
    bool trees = tree_decomposition_check(cg, opt.experimental_trees);
    pj["tree_check"] = trees;
    if (opt.experimental_trees) pj["tree_check_mode"] = "experimental";
    if (!trees) code = 1;
  } else {
    pj["tree_check"] = nullptr;
    pj["tree_check_mode"] = "not applicable: the spanning-tree criterion is used for quadrilateral balls";
  }
  j["polyhedral"] = pj;
  return finish(j, code);
}

std::string plain(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string pct(int a, int b) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << (b == 0 ? 0.0 : static_cast<double>(a) / b);
  return os.str();
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "analyze") return Command::Analyze;
  if (name == "symmetry") return Command::Symmetry;
  if (name == "color") return Command::Color;
  if (name == "explore") return Command::Explore;
  return std::nullopt;
}

Report run(Command command, const AnalysisDocument& doc, const RunOptions& options) {
  static const char* names[] = {"analyze", "symmetry", "color", "explore"};
  try {
    switch (command) {
      case Command::Analyze: return analyze(doc, options);
      case Command::Symmetry: return symmetry(doc, options);
      case Command::Color: return color(doc, options);
      case Command::Explore: {
        ScanConfig cfg;
        cfg.norm = doc.norm;
        if (doc.options.seed) cfg.seed = *doc.options.seed;
        if (doc.group_builtin.empty() && doc.group) cfg.group = doc.group->name();
        else if (!doc.group_builtin.empty()) cfg.group = doc.group_builtin;
        return run_explore(cfg);
      }
    }
  } catch (const Error& e) {
    json j;
    j["command"] = names[static_cast<int>(command)];
    j["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    return finish(j, 2);
  }
  return {};
}

Report run_explore(const ScanConfig& cfg) {
  try {
    auto report = conjecture_scan(cfg);
    json j;
    j["command"] = "explore";
    j["provenance"] = {{"backend", "exact"}, {"tolerance", nullptr}, {"seed", cfg.seed}};
    j["config"] = {{"group", cfg.group},
                   {"norm", cfg.norm.describe()},
                   {"min_vertices", cfg.min_vertices},
                   {"max_vertices", cfg.max_vertices},
                   {"trials", cfg.trials},
                   {"denominator", cfg.denominator},
                   {"probe_violators", cfg.probe_violators}};
    j["summary"] = {{"candidates", report.entries.size()},
                    {"satisfying", report.satisfying},
                    {"witnesses", report.witnesses},
                    {"possible_counterexamples", report.possible_counterexamples},
                    {"would_refute_necessity", report.would_refute}};
    json entries = json::array();
    for (const auto& e : report.entries) {
      const auto& c = e.candidate;
      json ej;
      ej["id"] = c.id;
      ej["vertices"] = c.graph.vertex_count();
      json edges = json::array();
      for (const auto& ed : c.graph.edges()) edges.push_back(edge_json(c.graph, ed));
      ej["edges"] = edges;
      ej["orbit_stabilizers"] = c.orbit_stabilizers;
      json theta = json::object();
      for (std::size_t g = 0; g < c.action.order(); ++g) theta[c.action.element_name(g)] = c.action.theta(g);
      ej["theta"] = theta;
      ej["group_type"] = c.conditions.group_type;
      ej["satisfies_conditions"] = c.satisfies_conditions;
      ej["failed_conditions"] = e.failed_conditions;
      ej["searched"] = e.searched;
      ej["found"] = e.placement.found;
      ej["flag"] = to_string(e.flag);
      if (e.searched) {
        ej["trials"] = e.placement.trials;
        ej["trial"] = e.placement.trial;
        ej["well_positioned_rate"] = pct(e.placement.well_positioned, e.placement.trials);
        ej["max_rank"] = e.placement.max_rank;
      }
      if (e.placement.witness) {
        json pts = json::array();
        for (const auto& p : e.placement.witness->points()) {
          json pj = json::array();
          for (const auto& x : p) pj.push_back(scalar_json(x));
          pts.push_back(pj);
        }
        ej["witness"] = pts;
      }
      entries.push_back(ej);
    }
    j["entries"] = entries;
    return finish(j, report.would_refute == 0 ? 0 : 1);
  } catch (const Error& e) {
    json j;
    j["command"] = "explore";
    j["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    return finish(j, 2);
  }
}

std::string render_text(const std::string& report_json) {
  auto j = json::parse(report_json);
  std::ostringstream os;
  os << j.value("command", std::string("?")) << ": " << j.value("status", std::string("?")) << "\n";
  if (j.contains("error")) {
    os << "  error (" << j["error"]["code"].get<std::string>() << "): " << j["error"]["message"].get<std::string>()
       << "\n";
    return os.str();
  }
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    os << "  backend " << p["backend"].get<std::string>();
    if (!p["tolerance"].is_null()) os << ", tolerance " << p["tolerance"].get<double>();
    if (!p["seed"].is_null()) os << ", seed " << p["seed"].get<std::uint64_t>();
    os << "\n";
  }
  if (j.contains("validation")) {
    const auto& v = j["validation"];
    os << "  symmetry validation: " << (v["ok"].get<bool>() ? "ok" : "FAILED " + v["message"].get<std::string>())
       << "\n";
  }
  if (j.contains("verdict")) {
    const auto& v = j["verdict"];
    os << "  " << v["verdict"].get<std::string>() << "  |V|=" << v["vertices"] << " |E|=" << v["edges"]
       << " rank=" << v["rank"] << " dim flex=" << v["dim_flex"] << " dim trivial=" << v["dim_trivial"] << "\n";
    for (const auto& e : v["bad_edges"]) os << "    non-smooth edge " << e[0].get<std::string>() << "-" << e[1].get<std::string>() << "\n";
  }
  if (j.contains("counts")) {
    for (const auto& c : j["counts"]) {
      os << "  [" << c["status"].get<std::string>() << "] " << c["statement"].get<std::string>();
      if (!c["applicable"].get<bool>()) os << " (premise not met)";
      if (!c["evaluated"].get<bool>()) os << " (not evaluated)";
      os << "\n";
    }
  }
  if (j.contains("symmetry")) {
    const auto& s = j["symmetry"];
    os << "  group " << s["group"].get<std::string>() << " of order " << s["order"] << "\n";
    if (s["characters"].is_array()) {
      os << "    element  class   |V_g| |E_g|  chi(P_E) chi(tau x P_V) chi(T)\n";
      for (const auto& r : s["characters"]) {
        os << "    " << std::left << std::setw(8) << r["element"].get<std::string>() << " " << std::setw(7)
           << r["class"].get<std::string>() << " " << std::setw(5) << r["v_fixed"].dump() << " " << std::setw(6)
           << r["e_fixed"].dump() << " " << std::setw(8) << r["chi_pe"].dump() << " " << std::setw(14)
           << plain(r["chi_tau_pv"]) << " " << plain(r["chi_trivial"]) << "\n";
      }
      for (const char* key : {"count_checks", "character_checks"})
        for (const auto& c : s[key])
          if (c["status"] == "fail")
            os << "    [fail] " << c["element"].get<std::string>() << ": " << c["statement"].get<std::string>() << "\n";
    } else {
      os << "    " << s.value("note", std::string()) << "\n";
    }
    if (!s["intertwining_residual"].is_null())
      os << "    intertwining residual " << s["intertwining_residual"].get<double>() << "\n";
  }
  if (j.contains("polyhedral")) {
    const auto& p = j["polyhedral"];
    if (p.contains("conditions")) {
      os << "  quadrilateral conditions (" << p["group_type"].get<std::string>() << ")\n";
      for (const auto& c : p["conditions"]) {
        os << "    [" << c["status"].get<std::string>() << "] " << c["strength"].get<std::string>() << " "
           << c["id"].get<std::string>();
        if (!c["element"].get<std::string>().empty()) os << "(" << c["element"].get<std::string>() << ")";
        os << ": " << c["statement"].get<std::string>();
        if (!c["witness"].empty() && c["status"] == "fail") os << "  witness " << c["witness"].dump();
        os << "\n";
      }
    }
    if (p.contains("monochrome")) {
      for (std::size_t l = 0; l < p["monochrome"].size(); ++l) {
        os << "  colour " << l << ":";
        for (const auto& e : p["monochrome"][l]) os << " " << e[0].get<std::string>() << "-" << e[1].get<std::string>();
        os << "\n";
      }
      if (p["tree_check"].is_null()) os << "  tree check " << p.value("tree_check_mode", std::string()) << "\n";
      else os << "  monochrome spanning trees: " << (p["tree_check"].get<bool>() ? "yes" : "no") << "\n";
    }
  }
  if (j.contains("summary")) {
    const auto& s = j["summary"];
    os << "  candidates " << s["candidates"] << ", satisfying conditions " << s["satisfying"] << ", witnesses "
       << s["witnesses"] << "\n  POSSIBLE-COUNTEREXAMPLE " << s["possible_counterexamples"]
       << ", WOULD-REFUTE-NECESSITY " << s["would_refute_necessity"] << "\n";
    for (const auto& e : j["entries"])
      if (e["flag"] != "NONE") os << "    candidate " << e["id"] << ": " << e["flag"].get<std::string>() << "\n";
  }
  return os.str();
}

std::string render_svg(const AnalysisDocument& doc, double tol) {
  const auto& fw = require_framework(doc);
  const auto n = fw.graph().vertex_count();
  std::vector<std::pair<double, double>> xy;
  for (std::size_t v = 0; v < n; ++v) {
    auto p = to_doubles(fw.point(v));
    double x = p.size() > 0 ? p[0] : 0.0, y = p.size() > 1 ? p[1] : 0.0;
    if (p.size() > 2) {
      x += 0.35 * p[2];
      y += 0.35 * p[2];
    }
    xy.emplace_back(x, -y);
  }
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  if (!xy.empty()) {
    minx = maxx = xy[0].first;
    miny = maxy = xy[0].second;
    for (auto [x, y] : xy) {
      minx = std::min(minx, x), maxx = std::max(maxx, x);
      miny = std::min(miny, y), maxy = std::max(maxy, y);
    }
  }
  const double size = 400, margin = 30;
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  auto sx = [&](double x) { return margin + (x - minx) / span * (size - 2 * margin); };
  auto sy = [&](double y) { return margin + (y - miny) / span * (size - 2 * margin); };
  std::vector<int> labels(fw.graph().edge_count(), -1);
  if (fw.norm().kind() == NormKind::Polyhedral && well_positioned(fw, tol).ok) {
    auto cg = edge_colors(fw, tol);
    labels = cg.labels;
  }
  static const char* palette[] = {"#000000", "#999999", "#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << static_cast<int>(size) << "\" height=\"" << static_cast<int>(size) << "\">\n";
  for (std::size_t i = 0; i < fw.graph().edge_count(); ++i) {
    const auto& e = fw.graph().edges()[i];
    const char* colour = labels[i] < 0 ? "#000000" : palette[labels[i] % 6];
    os << "  <line x1=\"" << sx(xy[e.u].first) << "\" y1=\"" << sy(xy[e.u].second) << "\" x2=\"" << sx(xy[e.v].first)
       << "\" y2=\"" << sy(xy[e.v].second) << "\" stroke=\"" << colour << "\" stroke-width=\"3\"/>\n";
  }
  for (std::size_t v = 0; v < n; ++v) {
    os << "  <circle cx=\"" << sx(xy[v].first) << "\" cy=\"" << sy(xy[v].second)
       << "\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << sx(xy[v].first) + 7 << "\" y=\"" << sy(xy[v].second) - 7
       << "\" font-size=\"11\">" << fw.graph().id(v) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace normrig

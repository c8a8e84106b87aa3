#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "normrig/error.hpp"
#include "normrig/report.hpp"

namespace {

int write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  out << content;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity analysis of bar-joint frameworks in normed spaces"};
  app.require_subcommand(1);

  std::string file, backend, svg, out;
  double tolerance = 0;
  bool as_json = false, experimental = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "framework document (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tolerance", tolerance, "float tolerance")->check(CLI::PositiveNumber);
    sub->add_flag("--json", as_json, "print the machine-readable report");
    sub->add_option("--svg", svg, "write a diagram of the framework");
  };
  auto* analyze = app.add_subcommand("analyze", "rigidity verdict and Maxwell counts");
  auto* symmetry = app.add_subcommand("symmetry", "symmetry validation, characters and count rules");
  auto* color = app.add_subcommand("color", "facet colouring and monochrome tree check");
  add_common(analyze);
  add_common(symmetry);
  add_common(color);
  color->add_flag("--experimental-trees", experimental, "d-tree check for d-dimensional polyhedral norms");

  normrig::ScanConfig scan;
  std::string norm = "linf2";
  std::size_t threads = 0;
  auto* explore = app.add_subcommand("explore", "search small symmetric tight graphs for isostatic placements");
  explore->add_option("file", file, "optional document whose norm and group are used");
  explore->add_option("--group", scan.group, "builtin group name");
  explore->add_option("--norm", norm, "builtin norm name, JSON file or JSON text");
  explore->add_option("--min-vertices", scan.min_vertices);
  explore->add_option("--max-vertices", scan.max_vertices);
  explore->add_option("--trials", scan.trials);
  explore->add_option("--seed", scan.seed);
  explore->add_option("--denominator", scan.denominator);
  explore->add_flag("--probe-violators", scan.probe_violators, "also search candidates that fail the conditions");
  explore->add_option("--threads", threads);
  explore->add_option("--out", out, "write the JSON report here");
  explore->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  normrig::Report report;
  try {
    if (explore->parsed()) {
      if (!file.empty()) {
        auto doc = normrig::load_document(file);
        scan.norm = doc.norm;
        if (!doc.group_builtin.empty()) scan.group = doc.group_builtin;
        if (doc.options.seed) scan.seed = *doc.options.seed;
      }
      if (explore->count("--norm") || file.empty()) {
        std::ifstream nf(norm);
        if (nf) {
          std::stringstream ss;
          ss << nf.rdbuf();
          scan.norm = normrig::parse_norm(ss.str());
        } else {
          scan.norm = normrig::parse_norm(norm);
        }
      }
      scan.threads = threads;
      report = normrig::run_explore(scan);
      if (!out.empty())
        if (int rc = write_file(out, report.json)) return rc;
    } else {
      auto* sub = app.get_subcommands().front();
      auto command = *normrig::parse_command(sub->get_name());
      auto doc = normrig::load_document(file);
      normrig::RunOptions opt;
      if (backend == "exact") opt.backend = normrig::Backend::Exact;
      if (backend == "float") opt.backend = normrig::Backend::Float;
      if (tolerance > 0) opt.tolerance = tolerance;
      opt.experimental_trees = experimental;
      report = normrig::run(command, doc, opt);
      if (!svg.empty())
        if (int rc = write_file(svg, normrig::render_svg(doc, opt.tolerance.value_or(normrig::kDefaultTolerance))))
          return rc;
    }
  } catch (const normrig::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << (as_json ? report.json : report.text);
  return report.exit_code;
}

#pragma once

#include <string>

#include "normrig/document.hpp"
#include "normrig/explorer.hpp"

namespace normrig {

enum class Command { Analyze, Symmetry, Color, Explore };

std::optional<Command> parse_command(const std::string& name);

struct RunOptions {
  std::optional<Backend> backend;
  std::optional<double> tolerance;
  bool experimental_trees = false;
};

/// Machine form (JSON) and the human summary derived from it.
struct Report {
  std::string json;
  std::string text;
  int exit_code = 0;
};

/// Exit codes: 0 pass, 1 a failed proven check, 2 bad input.
Report run(Command command, const AnalysisDocument& doc, const RunOptions& options = {});
Report run_explore(const ScanConfig& cfg);

/// Human-readable rendering of a report's machine form.
std::string render_text(const std::string& report_json);

/// Static drawing of the framework; edges coloured by facet pair when the
/// norm is polyhedral and the framework well-positioned.
std::string render_svg(const AnalysisDocument& doc, double tol = kDefaultTolerance);

}  // namespace normrig

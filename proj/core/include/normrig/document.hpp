#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "normrig/framework.hpp"
#include "normrig/group.hpp"
#include "normrig/linalg.hpp"

namespace normrig {

/// Builtin norm names: "l1_2", "l2_2", "linf2", "l1_3", "l2_3", "linf3",
/// "hexprism3". Returns nullopt for unknown names.
std::optional<NormSpec> builtin_norm(const std::string& name);

struct DocumentOptions {
  std::optional<Backend> backend;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
};

/// A framework, its norm and an optional symmetry, as read from JSON.
struct AnalysisDocument {
  std::string norm_name;  // builtin name, empty when given explicitly
  NormSpec norm = NormSpec::euclidean(2);
  std::optional<Framework> framework;
  std::optional<GroupAction> group;
  std::string group_builtin;  // builtin template the group came from, if any
  DocumentOptions options;
};

/// Parses and validates a document. Errors carry a JSON-pointer location.
AnalysisDocument parse_document(const std::string& json_text);
AnalysisDocument load_document(const std::string& path);

/// Canonical machine form (exact values as strings, floats as numbers).
std::string serialize_document(const AnalysisDocument& doc);

/// Norm given by name or JSON text (object form or builtin string).
NormSpec parse_norm(const std::string& name_or_json);

}  // namespace normrig

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normrig/framework.hpp"
#include "normrig/group.hpp"
#include "normrig/polyhedral.hpp"

namespace normrig {

struct ScanConfig {
  std::string group = "cs";
  NormSpec norm = NormSpec::linf(2);
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 8;
  int trials = 200;
  std::uint64_t seed = 1;
  /// Placements are drawn from {-den, ..., den} / den in each coordinate.
  long denominator = 64;
  /// Also search placements for candidates that fail a condition, to test
  /// that no isostatic witness exists for them.
  bool probe_violators = false;
  /// Limit on explored edge-orbit subsets during enumeration.
  std::size_t max_search_nodes = 2'000'000;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;

  void validate() const;
};

struct Candidate {
  std::size_t id = 0;
  Graph graph;
  GroupAction action;
  /// One entry per vertex orbit: its stabiliser as element names.
  std::vector<std::vector<std::string>> orbit_stabilizers;
  ConditionReport conditions;
  bool satisfies_conditions = false;
};

/// All (2,2)-tight graphs on min..max vertices carrying an action of the
/// group, one per equivariant isomorphism class, each with its condition
/// report. Throws SizeCap when the search budget is exceeded.
std::vector<Candidate> enumerate_candidates(const ScanConfig& cfg);

struct PlacementResult {
  bool found = false;
  std::optional<Framework> witness;
  int trial = -1;
  int trials = 0;
  int injective = 0;
  int well_positioned = 0;
  std::size_t max_rank = 0;
};

/// Samples symmetric rational placements: a grid point per orbit
/// representative, averaged over its stabiliser and carried around the
/// orbit by tau. Stops at the first isostatic one.
PlacementResult search_placement(const Graph& g, const GroupAction& action, const ScanConfig& cfg,
                                 std::size_t candidate_id = 0);

enum class ScanFlag { None, PossibleCounterexample, WouldRefuteNecessity };

const char* to_string(ScanFlag f);

struct ScanEntry {
  Candidate candidate;
  bool searched = false;
  PlacementResult placement;
  ScanFlag flag = ScanFlag::None;
  std::vector<std::string> failed_conditions;
};

struct ScanReport {
  ScanConfig config;
  std::vector<ScanEntry> entries;
  std::size_t satisfying = 0;
  std::size_t witnesses = 0;
  std::size_t possible_counterexamples = 0;
  std::size_t would_refute = 0;
};

ScanReport conjecture_scan(const ScanConfig& cfg);

}  // namespace normrig

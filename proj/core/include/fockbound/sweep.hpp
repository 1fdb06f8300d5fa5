#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fockbound/relations.hpp"

namespace fockbound {

struct SweepParams {
  std::uint64_t seed = 42;
  std::size_t count = 10000;
  /// Box sizes for single-mode states, drawn uniformly per state.
  std::size_t min_dim = 2;
  std::size_t max_dim = 60;
  /// Per-mode box sizes for two-mode states.
  std::size_t two_mode_min_dim = 2;
  std::size_t two_mode_max_dim = 12;
  std::vector<RelationId> relations;
  /// Violations kept (with the state) per relation; the count is always exact.
  std::size_t max_recorded = 16;
};

struct SweepViolation {
  std::size_t index = 0;
  RelationReport report;
  /// The offending state as JSON: a state file for single-mode relations,
  /// {"dim1", "dim2", "amplitudes"} for two-mode ones.
  std::string state_json;
};

struct RelationTally {
  RelationId id = RelationId::UNC3;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  double min_slack = 0.0;
  std::vector<SweepViolation> recorded;
};

struct SweepSummary {
  SweepParams params;
  std::vector<RelationTally> tallies;
  double runtime_seconds = 0.0;

  std::size_t total_violations() const;
};

/// Deterministic for a given SweepParams. Single-mode relations share one
/// stream of random states, two-mode relations another.
SweepSummary run_sweep(const SweepParams& params);

/// Summary JSON without the runtime, so equal inputs give equal bytes.
std::string to_json(const SweepSummary& summary);

}  // namespace fockbound

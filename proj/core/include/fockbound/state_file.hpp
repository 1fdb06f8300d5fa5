#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fockbound/fock_state.hpp"

namespace fockbound {

/// On-disk form of a FockState:
///
///   {"version": 1, "dim": D, "amplitudes": [[re, im], ...],
///    "metadata": {"family": "...", "warnings": ["..."]}}
///
/// Numbers are written with 17 significant digits, so write -> read -> write
/// is byte-identical. metadata is optional.
struct StateFile {
  int version = 1;
  AmplitudeVector amplitudes;
  std::optional<std::string> family;
  std::vector<std::string> warnings;

  std::size_t dim() const noexcept { return amplitudes.size(); }
};

StateFile make_state_file(const FockState& state, std::optional<std::string> family = std::nullopt,
                          std::vector<std::string> warnings = {});

/// Validates against make_state (non-empty, finite, non-zero norm).
FockState to_state(const StateFile& file);

std::string serialize(const StateFile& file);

/// Throws ParseError on malformed JSON or schema violations.
StateFile parse_state_file(std::string_view text);

StateFile read_state_file(const std::string& path);
void write_state_file(const std::string& path, const StateFile& file);

}  // namespace fockbound

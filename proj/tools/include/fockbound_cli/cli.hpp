#pragma once

#include <ostream>

namespace fockbound::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kTruncation = 3,
  kViolation = 4,
  kNonConvergence = 5,
};

/// Entry point of the `fockbound` tool. Data goes to `out` (or the --out
/// file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fockbound::cli

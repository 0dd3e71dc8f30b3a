#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace macaulay::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,     // bad arguments or unmet hypotheses
  kInternal = 3,  // an internal invariant failed
  kViolation = 4, // an inequality genuinely failed
};

/// Runs the command line `args` (without the program name), writing records
/// to out and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace macaulay::cli

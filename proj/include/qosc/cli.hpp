#pragma once

#include <iosfwd>

namespace qosc::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kInternalFault = 3,
};

/// Runs the command line; writes reports to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qosc::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qitool {

/// Exit codes of every command.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,  // --expect did not match
  kUsageError = 2,
  kDataError = 3,
};

/// Runs one command line (args excludes the program name). Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qitool

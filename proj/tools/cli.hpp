#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permchow::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kVerifyFailed = 2,
  kGuard = 3,
  kMalformed = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// payload to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permchow::cli

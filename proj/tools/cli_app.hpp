#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtwin::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

// Runs the command line `args` (without the program name), writing reports to
// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dtwin::cli

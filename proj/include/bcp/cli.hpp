#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bcp {

/// Exit codes of the `bcp` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidPartition = 1,  // `validate` found a problem
    kExitInputError = 2,
    kExitBudgetExceeded = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcp

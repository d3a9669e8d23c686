#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smoothwords {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 1,
    kExitResourceLimit = 2,
    kExitInvariantFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name). Output goes to
/// `out`, diagnostics and cache warnings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smoothwords

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eir {

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2, kExitResource = 3 };

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eir

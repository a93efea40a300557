#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nbhd {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitBudget = 3,
};

/// Runs one subcommand. args[0] is the program name. Diagnostics go to `err`
/// as "error:<kind>:<message>" lines.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nbhd

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kreg {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitBudget = 3 };

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kreg

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icolor::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // bad arguments, malformed input, I/O, limits
inline constexpr int kExitImpossible = 2;  // proven not colorable / invalid coloring
inline constexpr int kExitBudget = 3;      // search ran out of budget

// Runs the command line `args` (args[0] is the program name). Machine-readable
// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icolor::cli

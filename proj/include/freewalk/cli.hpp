#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freewalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// Runs one CLI invocation (args excludes the program name). Artifacts go to
// the --out directory; progress lines go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freewalk::cli

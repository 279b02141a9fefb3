#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latcol {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConflicts = 1;
inline constexpr int kExitAreaExhausted = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadInput = 65;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latcol

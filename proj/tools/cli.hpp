#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alphaspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;  // a mathematical claim failed
inline constexpr int kExitUsage = 2;         // bad flags, unreadable or malformed input
inline constexpr int kExitNumerical = 3;     // solver or iteration failure

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alphaspec::cli

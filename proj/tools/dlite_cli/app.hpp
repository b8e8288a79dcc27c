#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dlite::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

/// Full command-line entry point; args excludes the program name.
/// Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlite::cli

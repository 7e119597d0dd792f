#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fourcolor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (program name excluded) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fourcolor::cli

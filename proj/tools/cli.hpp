#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubelike::cli {

/// Exit codes: 0 success, 1 domain-level negative, 2 usage error.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

/// Runs the command line in args (without the program name).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cubelike::cli

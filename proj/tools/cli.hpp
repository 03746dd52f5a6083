#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace avoid321::cli {

/// Exit codes shared by every verb.
inline constexpr int kOk = 0;
inline constexpr int kViolated = 1;
inline constexpr int kUsage = 2;

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avoid321::cli

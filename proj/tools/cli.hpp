#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace avgconn::cli {

/// Exit statuses of the avgconn command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one avgconn invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avgconn::cli

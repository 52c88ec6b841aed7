#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcast2::cli {

/// Exit codes of the broadcast2 command.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,      ///< verification failure or internal error
  kInputError = 2,  ///< unreadable or malformed input, bad flags
  kGuard = 3,       ///< instance exceeds a size guard or cap
};

/// Environment variable that overrides the default size guards.
inline constexpr const char* kMaxNEnv = "BROADCAST2_MAX_N";

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcast2::cli

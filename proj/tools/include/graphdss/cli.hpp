#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphdss::cli {

/// Exit status contract of the graphdss tool.
enum ExitCode : int {
  kOk = 0,
  /// A verified property failed, or a repair was impossible.
  kPropertyViolation = 1,
  /// Bad flags, unreadable or invalid input.
  kUsage = 2,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace graphdss::cli

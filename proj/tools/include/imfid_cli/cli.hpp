#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imfid::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,   // bad flags, unreadable or malformed data file
  kModel = 3,   // degenerate orbit, unsupported contour shape
  kBudget = 4,  // compute budget exceeded
};

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imfid::cli

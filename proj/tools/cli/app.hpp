#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jetspec::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // anything not covered below (e.g. cannot write output)
  kParseError = 2,
  kNumericError = 3,
  kPreconditionError = 4,
};

// Runs the jetspec command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetspec::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grk::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kInfiniteDimensional = 3,
};

/// Runs the grk command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grk::cli

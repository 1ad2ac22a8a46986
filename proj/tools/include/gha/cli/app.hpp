#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gha::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitPhysicality = 2,  // physicality or unitarity failure under strict flags
  kExitNumerical = 3,
};

/// Runs the gha command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gha::cli

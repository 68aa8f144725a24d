#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unitrep::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,      // infeasible, not extendible, invalid
  kInputError = 2,
  kMismatch = 3,      // internal disagreement or failed self-check
};

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitrep::cli

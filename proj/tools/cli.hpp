#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sheffer::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,  // also parse errors and malformed input files
  kPrecondition = 3,
  kRejected = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sheffer::cli

#pragma once

#include <ostream>

namespace polyzeta::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitUnconverged = 3,
};

/// Runs one invocation of the polyzeta command line. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyzeta::cli

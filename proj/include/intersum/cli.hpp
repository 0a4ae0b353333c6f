#pragma once

#include <iosfwd>

namespace intersum {

// Exit status of run_cli.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,      // a check failed or a counterexample was found
  kExitUsage = 2,     // bad arguments, malformed input, parameters outside a bound's range
  kExitResource = 3,  // enumeration cutoff or arithmetic overflow
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace intersum

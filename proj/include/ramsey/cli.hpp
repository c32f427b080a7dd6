#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ramsey {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitPass = 0,
  kExitRefuted = 1,
  kExitUsage = 2,
  kExitInternal = 3,
  kExitBadInput = 4,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and progress to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ramsey

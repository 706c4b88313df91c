#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kneading::cli {

/// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kDomainError = 3,
  kSolverFailed = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// document to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kneading::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace warpcurv::cli {

enum ExitCode : int {
  kPass = 0,
  kUsage = 1,
  kVerificationFailed = 2,
  kNumerics = 3,
};

/// Runs the command line `args` (without the program name). The report goes
/// to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace warpcurv::cli

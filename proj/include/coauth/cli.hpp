#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coauth::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPartialFailure = 1,  // some authors failed in `metrics`
  kInvalidInput = 2,
};

/// Runs the `coauthnet` command line. `args` excludes the program name.
/// Normal output goes to `out` unless --out names a file; diagnostics go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coauth::cli

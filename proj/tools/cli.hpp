#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geomwave::cli {

enum ExitCode : int {
  kSuccess = 0,
  kContractFailure = 1,
  kUsageError = 2,
};

/// Runs one invocation. `args` excludes the program name. Tables go to
/// `out` when no --out stem is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace geomwave::cli

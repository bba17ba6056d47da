#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctlhom::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kValidation = 3,
  kUnstable = 4,
  kCounterexample = 5,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctlhom::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wedge::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 2,
  kTerminatedEarly = 3,
  kIoError = 4,
};

/// Runs the `wedge` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wedge::cli

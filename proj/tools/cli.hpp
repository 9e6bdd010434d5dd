#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symfitch::cli {

enum ExitCode : int {
  kFitch = 0,
  kNotFitch = 1,
  kInvalidInput = 2,
  kResourceLimit = 3,
};

// Runs the command line `args` (without the program name). Machine-readable
// output goes to `out`, human-readable summaries and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symfitch::cli

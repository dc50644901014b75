#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsg::cli {

// Exit statuses of the `hsg` tool.
enum ExitCode : int {
  kOk = 0,
  // verify found a counterexample, or census saw route disagreements.
  kCheckFailed = 1,
  // Unreadable or malformed input, bad arguments, or an exceeded budget.
  kInputError = 2,
  // classify/verify given a hyperoperation that is not associative.
  kNotAssociative = 3,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hsg::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace apolar::cli {

enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,     // checked-negative verdict: membership false, degenerate form, defect
  kInputError = 2,
  kNoConvergence = 3,
};

/// Runs one command line (without the program name). Machine output goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apolar::cli

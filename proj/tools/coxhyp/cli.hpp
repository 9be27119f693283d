#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxhyp::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,     ///< verify-paper found a mismatch
  kInputError = 2,      ///< bad flags, unreadable or malformed input, guard tripped
  kLemmaViolation = 3,  ///< lemma-b found a zero-row link on an irreducible non-parabolic matrix
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxhyp::cli

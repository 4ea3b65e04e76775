#pragma once

#include <iosfwd>
#include <span>

#include "corrdet/fixtures.hpp"

namespace corrdet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNotFound = 1,
  kUsage = 2,
  kValidation = 3,
  kGuaranteeFailed = 4,
  kIo = 5,
};

/// Entry point behind the `corrdet` binary: subcommands analyze,
/// paper-examples, sweep, search, gen; global --json, --tol, --seed.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Prints each fixture with its derived quantities and PASS/FAIL per
/// reference value. Returns kSuccess iff every check passes.
int run_worked_examples(std::span<const WorkedExample> fixtures, bool json, std::ostream& out);

}  // namespace corrdet::cli

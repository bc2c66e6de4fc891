#pragma once

#include <iosfwd>

namespace toricnash::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,   // oracle or golden-file diffs
  kUserError = 2,  // unreadable or invalid input
  kInternal = 3,   // invariant violation
};

/// Runs the tool with the given arguments; stdin is used when the input is "-"
/// or missing.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace toricnash::cli

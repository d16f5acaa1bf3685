#pragma once

#include <iosfwd>

namespace dyncc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kVerificationFailure = 2,
};

/// Runs the command line `argv` writing normal output to `out` and
/// diagnostics to `err`. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dyncc::cli

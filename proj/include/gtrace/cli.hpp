#pragma once

#include <iosfwd>

namespace gtrace::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kResourceLimit = 3 };

/// Runs one command line (argv[0] is the program name). Normal output goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gtrace::cli

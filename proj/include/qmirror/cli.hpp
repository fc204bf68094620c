#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmirror::cli {

enum ExitCode { Ok = 0, VerificationFailed = 1, InputError = 2 };

/// Runs the command line `args` (without the program name). Exit codes: 0 success
/// or all checks pass, 1 a verification failed, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmirror::cli

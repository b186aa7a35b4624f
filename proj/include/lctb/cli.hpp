#pragma once

#include <iosfwd>

namespace lctb {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_invalid_input = 2,
    exit_numerical_error = 3,
};

/// Entry point of `lctb`. Normal output goes to `out`; warnings and the
/// single-line JSON error record go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lctb

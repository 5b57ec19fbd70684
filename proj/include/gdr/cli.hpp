#pragma once

#include <iosfwd>

namespace gdr::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kNotConverged = 2,
};

/// Entry point behind the `gdr` executable; results go to `out`, usage and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gdr::cli

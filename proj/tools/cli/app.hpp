#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltader::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
    kSuccess = 0,    // ran and everything checked holds
    kCheckFailed = 1,
    kUsageError = 2, // bad flags, unreadable or invalid input
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace deltader::cli

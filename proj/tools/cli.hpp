#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compcount::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kDisagreement = 1,
    kUsage = 2,
    kGuard = 3,
    kNoClosedForm = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace compcount::cli

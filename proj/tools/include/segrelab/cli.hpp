#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segrelab::cli {

enum ExitCode : int {
    ok = 0,
    property_failure = 1,
    usage_error = 2,
    empty_input = 3,
    io_error = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics and scan summaries without --output to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segrelab::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdmr {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_yes = 0,       ///< YES, valid, or success
    exit_no = 1,        ///< NO, or not tree realisable
    exit_invalid = 2,   ///< unreadable, malformed, or invalid input
    exit_too_large = 3, ///< exhaustive search guard exceeded
};

/// Runs one command. args excludes the program name. The last line written to
/// out is always the summary "verdict=<YES|NO|ERROR> vertices=<m> extra=<e>".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cdmr

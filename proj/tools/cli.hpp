#ifndef RETRACTLAB_CLI_HPP
#define RETRACTLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace retractlab::cli {

/// Exit codes of the command-line surface (the machine contract besides
/// the JSON reports).
enum ExitCode : int {
    kOk = 0,           // check passed / verdict produced
    kCheckFailed = 1,  // the mathematical check answered "no"
    kUsageError = 2,   // bad flags, unparsable input, violated precondition
    kResourceLimit = 3 // degree cap or search budget exceeded
};

/// Runs one invocation; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace retractlab::cli

#endif

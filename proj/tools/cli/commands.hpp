#ifndef EIDEAL_TOOLS_COMMANDS_HPP
#define EIDEAL_TOOLS_COMMANDS_HPP

#include <iosfwd>

namespace eideal::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,   // usage, parse, I/O or precondition failure
    kMismatch = 2,     // a closed form disagrees with the oracle
    kNotCM = 3,        // check-cm: at least one graph is not Cohen-Macaulay
};

/// Entry point shared by the executable and the tests. Human-readable or
/// JSON output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace eideal::cli

#endif // EIDEAL_TOOLS_COMMANDS_HPP

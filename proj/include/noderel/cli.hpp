#pragma once

#include <iosfwd>

namespace noderel {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,  // a verification or certification did not pass
    kExitUsage = 2,        // bad arguments or unparseable input
    kExitRuntime = 3,      // size limits, search exhaustion, I/O failures
};

/// Entry point of the `noderel` tool; writes results to `out` and
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace noderel

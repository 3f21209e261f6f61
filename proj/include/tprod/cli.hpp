#pragma once

namespace tprod {

/// Exit codes of the command line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitMathError = 3,
};

/// Entry point of the `tprod` tool; returns the process exit code.
int cli_main(int argc, const char* const* argv);

} // namespace tprod

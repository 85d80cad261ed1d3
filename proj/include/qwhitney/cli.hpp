#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwhitney {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitIdentityFailure = 1,
    kExitUsage = 2,
};

/// Runs the command-line front end on already-split arguments (argv without
/// the program name). All regular output goes to `out`, diagnostics to `err`.
/// Stateless between invocations; identical arguments produce byte-identical
/// output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwhitney

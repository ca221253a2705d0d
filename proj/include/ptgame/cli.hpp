#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptgame::cli {

/// Exit codes shared by every subcommand.
enum ExitCode {
  kOk = 0,             // success / positive verdict
  kNegativeVerdict = 1,
  kUsageError = 2,     // bad flags, malformed scenario
  kRuntimeAbort = 3
};

/// Runs the command line (args excludes argv[0]). Writes human output to
/// `out` and diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ptgame::cli

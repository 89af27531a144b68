#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pkgenus::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The `verify` harness, also usable on its own.
int verify(int max_edges, int samples, unsigned long long seed, std::ostream& out);

}  // namespace pkgenus::cli

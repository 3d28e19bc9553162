#pragma once

#include <iosfwd>

namespace qtoda::cli {

enum ExitCode : int { exit_pass = 0, exit_failed = 1, exit_usage = 2, exit_internal = 3 };

/// Parse argv and run one command; output goes to `out`, diagnostics to `err`.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qtoda::cli

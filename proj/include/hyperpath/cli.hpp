#pragma once

#include <iosfwd>

namespace hyperpath {

// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_violated = 1,
    exit_input = 2,
    exit_budget = 3,
};

// Entry point of the `hyperpath` tool; reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperpath

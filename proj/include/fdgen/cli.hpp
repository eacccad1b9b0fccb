#pragma once

#include <iosfwd>

namespace fdgen::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { ok = 0, mismatch = 1, usage = 2 };

/// Runs the `fdgen` command line (subcommands gen, canon, verify, bench).
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fdgen::cli

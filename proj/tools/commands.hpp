#pragma once

#include <iosfwd>

namespace stringhom::cli {

enum ExitCode : int { OK = 0, VALIDATION = 2, TRUNCATED = 3, BREACH = 4 };

// Runs the command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stringhom::cli

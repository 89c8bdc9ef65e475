#pragma once

#include <iosfwd>

namespace phasetrop {

// Runs one command line; JSON goes to out, usage text to err. Returns the process exit code:
// 0 success, 2 input error, 3 non-convergence or a non-generic outcome.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phasetrop

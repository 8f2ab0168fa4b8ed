#pragma once

#include <iosfwd>

namespace vulnmap {

/// Runs the command line.  Returns the process exit code:
/// 0 ok, 1 internal error, 2 input error, 3 configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vulnmap

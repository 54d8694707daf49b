#pragma once

#include <iosfwd>

namespace radical::cli {

// Full command dispatch for the radical-forge binary. Returns the process
// exit code: 0 success, 1 parse error, 2 domain error, 3 precision exhausted.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace radical::cli

#pragma once

#include <ostream>

namespace sshecke {

// Command-line front end. Returns the process exit code: 0 success,
// 1 invariant failure, 2 usage error, 3 missing data dependency.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace sshecke

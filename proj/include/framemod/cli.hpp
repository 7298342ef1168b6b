#pragma once

#include <iosfwd>

namespace framemod {

// Entry point of the frame-module command-line tool, callable in-process
// for tests. Exit codes: 0 success, 1 computational failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace framemod

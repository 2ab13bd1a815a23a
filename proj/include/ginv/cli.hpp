#pragma once

#include <iosfwd>

namespace ginv {

// Full command-line entry point; writes results to `out`, diagnostics to
// `err`.  Returns 0 on success, 2 on input problems, 3 on resource caps,
// 1 on internal failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ginv

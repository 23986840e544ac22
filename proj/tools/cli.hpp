#pragma once

#include <iosfwd>

namespace bvmax {

// Runs the full command-line tool against the given streams and returns the
// process exit code: 0 success, 1 verification violation, 2 invalid input,
// 3 I/O failure. stdout carries machine-readable output only (JSON or CSV);
// stderr carries human-readable messages.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bvmax

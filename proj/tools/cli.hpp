#pragma once

#include <ostream>

namespace sccpref::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kTimeout = 3,
  kInternalError = 4,
};

// Entry point shared by the executable and the tests. Normal output goes to
// `out` unless redirected with --output; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sccpref::cli

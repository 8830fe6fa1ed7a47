#pragma once

#include <iosfwd>

namespace binomgroup::cli {

enum ExitCode { kOk = 0, kUsage = 1, kEngine = 2, kAcceptance = 3 };

// Entry point shared by the binary and the tests. Machine-readable output goes
// to `out` (unless --out is given), human summaries to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace binomgroup::cli

#pragma once

#include <iosfwd>

namespace seifinv::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seifinv::cli

#pragma once

#include <ostream>

namespace qcat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `qcat` tool: report, sweep, figure and verify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcat::cli

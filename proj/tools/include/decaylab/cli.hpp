#pragma once

#include <iosfwd>

namespace decaylab::cli {

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kValidation = 1;
inline constexpr int kNumeric = 2;
inline constexpr int kUsage = 64;

/// Entry point of the `decaylab` tool. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace decaylab::cli

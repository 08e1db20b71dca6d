#pragma once

#include <iosfwd>

namespace sturan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIndeterminate = 3;

/// Entry point of the `sturan` tool. Reports go to `out` unless --out is
/// given; diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sturan

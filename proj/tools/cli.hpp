#pragma once

#include <iosfwd>

namespace tourney::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. Reports go to `out` as a single JSON document (or a
/// .tour / plain listing where requested); diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tourney::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbppa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Default seed when neither --seed nor SBPPA_SEED is given.
inline constexpr unsigned long long kDefaultSeed = 20160627ULL;

/// Runs the command line `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sbppa::cli

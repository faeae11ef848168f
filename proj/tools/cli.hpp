#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hellmann::cli {

// Exit-code contract.
inline constexpr int kSuccess = 0;
inline constexpr int kNumericalFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line `hellmann <subcommand> [flags]`. args excludes the
/// program name. Table output goes to `out` unless --out is given.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace hellmann::cli

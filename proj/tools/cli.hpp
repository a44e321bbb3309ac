#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace christol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. args excludes the program name. Results go to out,
/// one-line diagnostics to err.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace christol::cli

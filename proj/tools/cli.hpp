#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Runs one command line. args excludes the program name. Output goes to
/// out, diagnostics and help synopses for usage errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mis::cli

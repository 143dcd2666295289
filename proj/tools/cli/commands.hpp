#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace degcorr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

/// Runs the `degcorr` command line. `args` excludes the program name.
/// Returns the process exit code; never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degcorr::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace circlecheb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the circle-cheb tool. `args` excludes the program name.
/// Reports go to `out` (or the --output file), diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circlecheb::cli

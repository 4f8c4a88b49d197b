#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riemann::cli {

/// Environment variable naming the default zero cache; --cache wins.
inline constexpr const char* kCacheEnv = "RIEMANN_ZERO_CACHE";
inline constexpr const char* kDefaultCache = "riemann_zeros.csv";

enum ExitCode : int { kOk = 0, kUsage = 2, kCorrupt = 3 };

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riemann::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibconj::cli {

/// Exit codes: 0 success, 1 a reported check failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibconj::cli

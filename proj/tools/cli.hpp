#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace physlim::cli {

/// Exit codes: 0 success, 1 verification or comparison failure, 2 usage or
/// configuration error. Data goes to `out`, diagnostics to `err`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace physlim::cli

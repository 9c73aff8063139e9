#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace demyanov::cli {

// sysexits-style codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitSoftware = 70;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace demyanov::cli

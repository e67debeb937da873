#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qubitfit::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // verification or acceptance failure
inline constexpr int kUsage = 2;   // bad flags, parse errors, I/O errors

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qubitfit::cli

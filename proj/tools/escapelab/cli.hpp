#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace escapelab::cli {

// Exit codes: 0 success, 1 a check failed, 2 bad input.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadInput = 2;

// Runs the command line `args` (without the program name), writing results
// to `out` (or to --out) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace escapelab::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multiring::cli {

// Exit codes.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kBudgetExceeded = 3;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multiring::cli

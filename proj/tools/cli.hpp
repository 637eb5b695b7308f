#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fodesc::cli {

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int verification_failure = 1;
inline constexpr int input_error = 2;
inline constexpr int budget_exceeded = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fodesc::cli

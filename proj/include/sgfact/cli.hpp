#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgfact::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kNotReduced = 3;
inline constexpr int kInfinite = 4;
inline constexpr int kCrossCheck = 5;

// args excludes the program name. The result goes to `out` as one JSON
// document (or text lines), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgfact::cli

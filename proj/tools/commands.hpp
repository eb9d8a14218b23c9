#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triepal::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;     // usage errors, check divergences
inline constexpr int kParseError = 2;  // malformed ops file
inline constexpr int kSemanticError = 3;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace triepal::cli

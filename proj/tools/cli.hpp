#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sombor::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line `args` (args[0] is the program name). Output goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// "5", "3..8", "3..n-1", "n"; `n` resolves to the given order.
std::vector<int> expand_range(const std::string& text, int n);

}  // namespace sombor::cli

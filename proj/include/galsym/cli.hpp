#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace galsym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (args exclude the program name). Writes a single JSON
/// line to `out`: the result, or {"error": ...} on failure. `in` backs
/// "--input -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace galsym::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace softgame::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitFound = 0;      // non-empty solution / property holds
inline constexpr int kExitNotFound = 1;   // empty solution / property fails
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidInput = 3;

// Runs the tool on `args` (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace softgame::cli

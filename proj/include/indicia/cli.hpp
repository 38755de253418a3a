#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indicia::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;      // parse errors, invalid operators, bad usage
inline constexpr int exit_hypothesis_error = 2; // unmet analysis preconditions

/// Runs one subcommand. args excludes the program name. The report goes to
/// out and diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64-bit digest as 16 lowercase hex digits.
std::string digest(const std::string& bytes);

} // namespace indicia::cli

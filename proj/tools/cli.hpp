#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace factoradic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Runs one subcommand. `args` excludes the program name, e.g.
/// {"encode", "16", "--len", "4"}. Permutation arguments given as "-" are
/// read from `in`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace factoradic::cli

#pragma once

#include <compare>
#include <cstddef>
#include <optional>

#include "factoradic/integer.hpp"
#include "factoradic/types.hpp"

// Conversions between integers, factoradic digits and tame permutations.
//
// The factoradic form of n is the n-th tame permutation in factoradic order
// (the reverse of right-to-left lexicographic order). Its digits a_j count the
// earlier entries that exceed the entry at position j, and n = sum a_j * j!.

namespace factoradic {

/// Smallest s >= 1 with n < s!.
std::size_t minimal_prefix_length(const Integer& n);

/// Digits of n, of length `length` when given, else minimal_prefix_length(n).
/// Throws PrefixTooShort if n >= length!.
FactoradicDigits digits_from_integer(const Integer& n,
                                     std::optional<std::size_t> length = std::nullopt,
                                     const Limits& limits = {});

/// sum a_i * i!.
Integer integer_from_digits(const FactoradicDigits& digits);

/// Complete permutation of {0, ..., s-1} whose digits are `digits`.
TamePermutation permutation_from_digits(const FactoradicDigits& digits);

/// a_j = #{ i < j : p_i > p_j }. O(s log s).
FactoradicDigits digits_from_permutation(const PermutationPrefix& prefix);

/// Factoradic form of n, written with `length` entries when given, else in
/// its canonical (minimal) writing.
TamePermutation encode(const Integer& n, std::optional<std::size_t> length = std::nullopt,
                       const Limits& limits = {});

/// Inverse of encode; any padded writing decodes to the same integer.
Integer decode(const TamePermutation& permutation);

/// Factoradic order after fixed-point extension: `less` means p precedes q,
/// which holds exactly when decode(p) < decode(q).
std::strong_ordering compare_factoradic(const TamePermutation& p, const TamePermutation& q);

}  // namespace factoradic

#pragma once

#include <cstddef>
#include <vector>

#include "factoradic/integer.hpp"
#include "factoradic/inversions.hpp"
#include "factoradic/modular.hpp"
#include "factoradic/types.hpp"

// Brute-force definitions that the fast paths are checked against. Clarity
// over speed; nothing here shares code with the codec.

namespace factoradic::reference {

inline constexpr std::size_t kMaxEnumerationLength = 8;

/// All s! permutations of {0, ..., s-1}, sorted by compare_factoradic.
/// Throws RangeTooLarge if s > 8.
std::vector<TamePermutation> permutations_in_factoradic_order(std::size_t s);

/// The n-th entry of permutations_in_factoradic_order(s).
TamePermutation nth_permutation_bruteforce(const Integer& n, std::size_t s);

/// Direct double loop over position pairs.
InversionSet inversions_bruteforce(const PermutationPrefix& prefix);

/// a_j = #{ i < j : p_i > p_j } by a quadratic scan.
FactoradicDigits digits_bruteforce(const PermutationPrefix& prefix);

/// sum inv(i, j) * j! with exact arithmetic.
Integer weighted_inversion_sum(const InversionSet& set);

/// Plain arbitrary-precision remainder.
Residue mod_direct(const Integer& n, Modulus k);

}  // namespace factoradic::reference

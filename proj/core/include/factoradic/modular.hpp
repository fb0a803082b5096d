#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "factoradic/integer.hpp"
#include "factoradic/inversions.hpp"
#include "factoradic/types.hpp"

// n mod k read off the k-prefix of the factoradic form of n:
//
//     n = sum_{i<j<k} inv(i, j) * j!   (mod k)
//
// Only columns j < S(k) contribute, where S(k) is the least j with k | j!.

namespace factoradic {

using Modulus = std::uint64_t;

struct Residue {
    std::uint64_t value = 0;
    Modulus modulus = 1;

    friend bool operator==(const Residue&, const Residue&) = default;
};

enum class Summation {
    /// Stop at column S(k); later columns have coefficient j! = 0 mod k.
    kempner_cutoff,
    /// Sum every column j < k.
    full,
};

/// Least j >= 1 such that k divides j!. Throws ModulusZero for k = 0.
std::size_t kempner(Modulus k);

/// j! mod k for j = 0, ..., count-1, each from the previous one.
std::vector<std::uint64_t> factorial_residues(Modulus k, std::size_t count);

Residue residue_from_prefix(const PermutationPrefix& prefix, Modulus k,
                            Summation summation = Summation::kempner_cutoff);

/// Reduces n mod k!, encodes that with length k and applies the prefix formula.
Residue residue(const Integer& n, Modulus k, const Limits& limits = {});

/// Inversion set of the s-prefix of the factoradic form of n.
InversionSet prefix_inversions(const Integer& n, std::size_t s, const Limits& limits = {});

bool divisible(const Integer& n, Modulus k, const Limits& limits = {});
bool divisible(const PermutationPrefix& prefix, Modulus k);

}  // namespace factoradic

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "factoradic/format.hpp"
#include "factoradic/modular.hpp"
#include "factoradic/types.hpp"

namespace factoradic {

struct RuleTerm {
    std::size_t i = 0;
    std::size_t j = 0;
    /// Balanced representative of j! mod k, never zero.
    std::int64_t coefficient = 0;

    friend bool operator==(const RuleTerm&, const RuleTerm&) = default;
};

/// Linear form sum coefficient * inv(i, j) congruent to n mod k on the
/// k-prefix of the factoradic form of n. Terms are sorted by (j, i).
struct DivisibilityRule {
    Modulus modulus = 2;
    /// min(k, S(k)); every term has j < effective_length.
    std::size_t effective_length = 0;
    std::vector<RuleTerm> terms;

    friend bool operator==(const DivisibilityRule&, const DivisibilityRule&) = default;
};

/// Representative of c mod k in (-ceil(k/2), floor(k/2)], so k-1 maps to -1
/// and k/2 stays positive for even k.
std::int64_t balanced_residue(std::uint64_t c, Modulus k);

/// Throws ModulusTooSmall when k < 2, LengthCapExceeded when the pair table
/// would exceed limits.max_pair_table_length columns.
DivisibilityRule generate_rule(Modulus k, const Limits& limits = {});

/// Applies the rule to the first effective_length entries of `prefix`.
Residue evaluate_rule(const DivisibilityRule& rule, const PermutationPrefix& prefix);

/// plain: "inv(0,1) + 2(inv(0,2) + inv(1,2))". Consecutive columns sharing a
/// coefficient are grouped; inside a group pairs are ordered by (i, j).
/// json: {"k":6,"terms":[{"i":0,"j":1,"c":1},...]}, terms by (j, i).
std::string render_rule(const DivisibilityRule& rule, Format format);

/// Rules for k = 2, ..., k_max (only primes when `primes_only`).
std::vector<DivisibilityRule> rule_table(Modulus k_max, bool primes_only = false,
                                         const Limits& limits = {});

/// JSON array of rule objects.
std::string render_table_json(const std::vector<DivisibilityRule>& rules);

}  // namespace factoradic

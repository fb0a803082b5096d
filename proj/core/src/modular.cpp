#include "factoradic/modular.hpp"

#include <algorithm>
#include <string>

#include "factoradic/codec.hpp"
#include "factoradic/detail/wide.hpp"
#include "factoradic/error.hpp"

namespace factoradic {

namespace {

void require_modulus(Modulus k) {
    if (k == 0) {
        throw Error(ErrorCode::ModulusZero, "modulus must be at least 1");
    }
}

}  // namespace

std::size_t kempner(Modulus k) {
    require_modulus(k);
    std::uint64_t f = 1 % k;  // 1! mod k
    std::size_t j = 1;
    while (f != 0) {
        ++j;
        f = detail::mul_mod(f, j % k, k);
    }
    return j;
}

std::vector<std::uint64_t> factorial_residues(Modulus k, std::size_t count) {
    require_modulus(k);
    std::vector<std::uint64_t> out(count);
    std::uint64_t f = 1 % k;
    for (std::size_t j = 0; j < count; ++j) {
        if (j > 0) {
            f = detail::mul_mod(f, j % k, k);
        }
        out[j] = f;
    }
    return out;
}

Residue residue_from_prefix(const PermutationPrefix& prefix, Modulus k, Summation summation) {
    require_modulus(k);
    if (prefix.size() < k) {
        throw Error(ErrorCode::PrefixTooShort, "prefix has " + std::to_string(prefix.size()) +
                                                   " entries, modulus needs " + std::to_string(k));
    }
    auto columns = static_cast<std::size_t>(k);
    if (summation == Summation::kempner_cutoff) {
        columns = std::min(columns, kempner(k));
    }
    // Column j of the inversion set depends only on positions <= j.
    FactoradicDigits counts = inversion_counts(prefix.first(columns));
    std::vector<std::uint64_t> coeff = factorial_residues(k, columns);
    std::uint64_t acc = 0;
    for (std::size_t j = 1; j < columns; ++j) {
        acc = detail::add_mod(acc, detail::mul_mod(counts[j] % k, coeff[j], k), k);
    }
    return Residue{acc, k};
}

Residue residue(const Integer& n, Modulus k, const Limits& limits) {
    require_non_negative(n);
    require_modulus(k);
    check_length(static_cast<std::size_t>(k), limits);
    auto length = static_cast<std::size_t>(k);
    Integer period = factorial(length);
    Integer reduced = n % period;
    return residue_from_prefix(encode(reduced, length, limits).as_prefix(), k);
}

InversionSet prefix_inversions(const Integer& n, std::size_t s, const Limits& limits) {
    require_non_negative(n);
    if (s == 0) {
        throw Error(ErrorCode::EmptySequence, "prefix length must be at least 1");
    }
    check_length(s, limits);
    Integer reduced = n % factorial(s);
    return inversion_set(encode(reduced, s, limits).as_prefix(), limits);
}

bool divisible(const Integer& n, Modulus k, const Limits& limits) {
    return residue(n, k, limits).value == 0;
}

bool divisible(const PermutationPrefix& prefix, Modulus k) {
    return residue_from_prefix(prefix, k).value == 0;
}

}  // namespace factoradic

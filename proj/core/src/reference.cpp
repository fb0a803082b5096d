#include "factoradic/reference.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "factoradic/codec.hpp"
#include "factoradic/error.hpp"

namespace factoradic::reference {

std::vector<TamePermutation> permutations_in_factoradic_order(std::size_t s) {
    if (s == 0) {
        throw Error(ErrorCode::EmptySequence, "permutation length must be at least 1");
    }
    if (s > kMaxEnumerationLength) {
        throw Error(ErrorCode::RangeTooLarge, "enumeration of " + std::to_string(s) +
                                                  "! permutations refused (limit " +
                                                  std::to_string(kMaxEnumerationLength) + ")");
    }
    std::vector<Entry> p(s);
    std::iota(p.begin(), p.end(), Entry{0});
    std::vector<TamePermutation> all;
    do {
        all.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(all.begin(), all.end(), [](const TamePermutation& a, const TamePermutation& b) {
        return compare_factoradic(a, b) < 0;
    });
    return all;
}

TamePermutation nth_permutation_bruteforce(const Integer& n, std::size_t s) {
    require_non_negative(n);
    auto all = permutations_in_factoradic_order(s);
    if (n >= all.size()) {
        throw Error(ErrorCode::PrefixTooShort,
                    to_decimal(n) + " is not below " + std::to_string(s) + "!");
    }
    return all[n.get_ui()];
}

InversionSet inversions_bruteforce(const PermutationPrefix& prefix) {
    InversionSet set(prefix.size());
    for (std::size_t j = 0; j < prefix.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (prefix[i] > prefix[j]) {
                set.set(i, j);
            }
        }
    }
    return set;
}

FactoradicDigits digits_bruteforce(const PermutationPrefix& prefix) {
    std::vector<Digit> out(prefix.size(), 0);
    for (std::size_t j = 0; j < prefix.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (prefix[i] > prefix[j]) {
                ++out[j];
            }
        }
    }
    return FactoradicDigits(std::move(out));
}

Integer weighted_inversion_sum(const InversionSet& set) {
    Integer total = 0;
    Integer weight = 1;
    for (std::size_t j = 1; j < set.size(); ++j) {
        weight *= static_cast<unsigned long>(j);
        for (std::size_t i = 0; i < j; ++i) {
            if (set.contains(i, j)) {
                total += weight;
            }
        }
    }
    return total;
}

Residue mod_direct(const Integer& n, Modulus k) {
    require_non_negative(n);
    if (k == 0) {
        throw Error(ErrorCode::ModulusZero, "modulus must be at least 1");
    }
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return Residue{r.get_ui(), k};
}

}  // namespace factoradic::reference

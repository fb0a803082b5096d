#include "factoradic/codec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "factoradic/detail/fenwick.hpp"
#include "factoradic/error.hpp"

namespace factoradic {

namespace {

// Below this many digits the packed iterative divmod beats the recursive split.
constexpr std::size_t kLeafDigits = 64;

constexpr unsigned long kWordMax = std::numeric_limits<unsigned long>::max();

// Writes digits lo..hi-1 of v, where v = sum_{i=lo}^{hi-1} a_i * i!/lo!.
// Radix of digit i is i+1; several radices are packed per machine word.
void split_iterative(Integer v, std::size_t lo, std::size_t hi, std::vector<Digit>& out) {
    std::size_t i = lo;
    while (i < hi) {
        unsigned long word = 1;
        std::size_t end = i;
        while (end < hi && word <= kWordMax / (end + 1)) {
            word *= static_cast<unsigned long>(end + 1);
            ++end;
        }
        unsigned long rem = mpz_tdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), word);
        for (; i < end; ++i) {
            out[i] = static_cast<Digit>(rem % (i + 1));
            rem /= (i + 1);
        }
    }
}

void split(const Integer& v, std::size_t lo, std::size_t hi, std::vector<Digit>& out) {
    if (hi - lo <= kLeafDigits) {
        split_iterative(v, lo, hi, out);
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    Integer high;
    Integer low;
    Integer divisor = rising_product(lo, mid);
    mpz_tdiv_qr(high.get_mpz_t(), low.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
    split(low, lo, mid, out);
    split(high, mid, hi, out);
}

// Returns sum_{i=lo}^{hi-1} a_i * i!/lo!; the product (lo+1)...(hi) is
// written to `product` when non-null.
Integer combine(std::span<const Digit> d, std::size_t lo, std::size_t hi, Integer* product) {
    if (hi - lo <= kLeafDigits) {
        // Horner from the top digit, v = v * (i+1) + a_i, packing several
        // radices into one word multiply.
        Integer v = d[hi - 1];
        std::size_t i = hi - 1;
        while (i > lo) {
            unsigned long mul = 1;
            unsigned long add = 0;
            while (i > lo && mul <= kWordMax / i) {
                --i;
                auto radix = static_cast<unsigned long>(i + 1);
                mul *= radix;
                add = add * radix + d[i];
            }
            v *= mul;
            v += add;
        }
        if (product != nullptr) {
            *product = rising_product(lo, hi);
        }
        return v;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    Integer low_product;
    Integer low = combine(d, lo, mid, &low_product);
    Integer high_product;
    Integer high = combine(d, mid, hi, product != nullptr ? &high_product : nullptr);
    Integer v = high * low_product + low;
    if (product != nullptr) {
        *product = low_product * high_product;
    }
    return v;
}

std::size_t minimal_length_small(unsigned long n) {
    // n < s! with s! computed incrementally; 20! < 2^64 < 21!.
    std::size_t s = 1;
    unsigned long f = 1;
    while (n >= f) {
        ++s;
        if (f > kWordMax / s) {
            return s;
        }
        f *= s;
    }
    return s;
}

}  // namespace

std::size_t minimal_prefix_length(const Integer& n) {
    require_non_negative(n);
    if (n.fits_ulong_p()) {
        return minimal_length_small(n.get_ui());
    }
    // Estimate from log(n) = log(s!) via lgamma, then correct exactly.
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    double log_n = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    std::size_t lo = 20;
    std::size_t hi = 40;
    while (std::lgamma(static_cast<double>(hi) + 1.0) <= log_n) {
        hi *= 2;
    }
    while (lo + 1 < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (std::lgamma(static_cast<double>(mid) + 1.0) <= log_n) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    std::size_t s = hi;
    Integer f = factorial(s - 1);
    while (s > 1 && n < f) {
        --s;
        f /= static_cast<unsigned long>(s);
    }
    while (n >= f * static_cast<unsigned long>(s)) {
        f *= static_cast<unsigned long>(s);
        ++s;
    }
    return s;
}

FactoradicDigits digits_from_integer(const Integer& n, std::optional<std::size_t> length,
                                     const Limits& limits) {
    require_non_negative(n);
    std::size_t minimal = minimal_prefix_length(n);
    std::size_t s = length.value_or(minimal);
    if (s == 0) {
        throw Error(ErrorCode::EmptySequence, "prefix length must be at least 1");
    }
    check_length(s, limits);
    if (s < minimal) {
        throw Error(ErrorCode::PrefixTooShort,
                    to_decimal(n) + " needs " + std::to_string(minimal) + " digits, got " +
                        std::to_string(s));
    }
    std::vector<Digit> out(s, 0);
    split(n, 0, minimal, out);
    return FactoradicDigits(unchecked, std::move(out));
}

Integer integer_from_digits(const FactoradicDigits& digits) {
    return combine(digits.values(), 0, digits.size(), nullptr);
}

TamePermutation permutation_from_digits(const FactoradicDigits& digits) {
    std::size_t s = digits.size();
    auto pool = detail::FenwickTree::filled(s);
    std::vector<Entry> out(s);
    for (std::size_t j = s; j-- > 0;) {
        // The pool holds j+1 values; the pick has exactly a_j larger ones.
        std::size_t value = pool.select(static_cast<std::int64_t>(j - digits[j]));
        pool.add(value, -1);
        out[j] = value;
    }
    return TamePermutation(unchecked, std::move(out));
}

FactoradicDigits digits_from_permutation(const PermutationPrefix& prefix) {
    std::size_t s = prefix.size();
    std::vector<std::size_t> rank(s);
    auto entries = prefix.entries();
    if (prefix.is_complete()) {
        std::copy(entries.begin(), entries.end(), rank.begin());
    } else {
        std::vector<Entry> sorted(entries.begin(), entries.end());
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j < s; ++j) {
            rank[j] = static_cast<std::size_t>(
                std::lower_bound(sorted.begin(), sorted.end(), entries[j]) - sorted.begin());
        }
    }
    detail::FenwickTree seen(s);
    std::vector<Digit> out(s);
    for (std::size_t j = 0; j < s; ++j) {
        auto smaller_before = static_cast<std::size_t>(seen.prefix_sum(rank[j]));
        out[j] = static_cast<Digit>(j - smaller_before);
        seen.add(rank[j], 1);
    }
    return FactoradicDigits(unchecked, std::move(out));
}

TamePermutation encode(const Integer& n, std::optional<std::size_t> length, const Limits& limits) {
    return permutation_from_digits(digits_from_integer(n, length, limits));
}

Integer decode(const TamePermutation& permutation) {
    return integer_from_digits(digits_from_permutation(permutation.as_prefix()));
}

std::strong_ordering compare_factoradic(const TamePermutation& p, const TamePermutation& q) {
    for (std::size_t j = std::max(p.size(), q.size()); j-- > 0;) {
        Entry a = p.at(j);
        Entry b = q.at(j);
        if (a != b) {
            // The larger entry at the last differing position comes first.
            return a > b ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace factoradic

#include "factoradic/integer.hpp"

#include "factoradic/error.hpp"

namespace factoradic {

namespace {

constexpr std::size_t kLeafTerms = 16;

}  // namespace

Integer parse_integer(std::string_view text) {
    if (text.empty()) {
        throw Error(ErrorCode::ParseError, "empty integer");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw Error(ErrorCode::ParseError,
                        "malformed decimal integer '" + std::string(text) + "'");
        }
    }
    Integer n;
    n.set_str(std::string(text), 10);
    return n;
}

std::string to_decimal(const Integer& n) { return n.get_str(10); }

void require_non_negative(const Integer& n) {
    if (sgn(n) < 0) {
        throw Error(ErrorCode::NegativeValue, "negative integer " + to_decimal(n));
    }
}

Integer factorial(std::size_t s) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(s));
    return f;
}

Integer rising_product(std::size_t lo, std::size_t hi) {
    if (hi <= lo) {
        return 1;
    }
    if (hi - lo <= kLeafTerms) {
        Integer p = 1;
        unsigned long word = 1;
        for (std::size_t t = lo + 1; t <= hi; ++t) {
            if (word > ~0UL / t) {
                p *= word;
                word = 1;
            }
            word *= static_cast<unsigned long>(t);
        }
        p *= word;
        return p;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return rising_product(lo, mid) * rising_product(mid, hi);
}

}  // namespace factoradic

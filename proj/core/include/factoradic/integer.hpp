#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace factoradic {

/// Arbitrary-precision integer. Library entry points reject negative values.
using Integer = mpz_class;

/// Parses an unbounded non-negative decimal string. Leading '+', signs,
/// whitespace, hex or exponent forms are rejected with ErrorCode::ParseError.
Integer parse_integer(std::string_view text);

std::string to_decimal(const Integer& n);

/// Throws ErrorCode::NegativeValue when n < 0.
void require_non_negative(const Integer& n);

Integer factorial(std::size_t s);

/// Product (lo+1)(lo+2)...(hi); 1 when hi <= lo.
Integer rising_product(std::size_t lo, std::size_t hi);

}  // namespace factoradic

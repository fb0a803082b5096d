#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace factoradic {

enum class ErrorCode {
    PrefixTooShort,
    InvalidDigit,
    DuplicateEntry,
    NotAPermutation,
    EmptySequence,
    NegativeValue,
    ModulusZero,
    ModulusTooSmall,
    RangeTooLarge,
    LengthCapExceeded,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every contract violation in the library surfaces as this exception.
class Error : public std::invalid_argument {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace factoradic

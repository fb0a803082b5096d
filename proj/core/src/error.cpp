#include "factoradic/error.hpp"

namespace factoradic {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::PrefixTooShort: return "PrefixTooShort";
        case ErrorCode::InvalidDigit: return "InvalidDigit";
        case ErrorCode::DuplicateEntry: return "DuplicateEntry";
        case ErrorCode::NotAPermutation: return "NotAPermutation";
        case ErrorCode::EmptySequence: return "EmptySequence";
        case ErrorCode::NegativeValue: return "NegativeValue";
        case ErrorCode::ModulusZero: return "ModulusZero";
        case ErrorCode::ModulusTooSmall: return "ModulusTooSmall";
        case ErrorCode::RangeTooLarge: return "RangeTooLarge";
        case ErrorCode::LengthCapExceeded: return "LengthCapExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace factoradic

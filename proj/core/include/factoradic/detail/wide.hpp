#pragma once

#include <cstdint>

namespace factoradic::detail {

__extension__ typedef unsigned __int128 uint128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t k) noexcept {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % k);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t k) noexcept {
    return static_cast<std::uint64_t>((static_cast<uint128>(a) + b) % k);
}

}  // namespace factoradic::detail

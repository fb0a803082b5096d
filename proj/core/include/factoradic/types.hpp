#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace factoradic {

using Digit = std::uint32_t;
using Entry = std::uint64_t;

/// Upper bound on accepted prefix lengths. A permutation of length s costs
/// O(s) memory even though s! itself is never materialized.
struct Limits {
    std::size_t max_length = 1'000'000;
    /// Cap for explicit pair tables, which cost s(s-1)/2 bits.
    std::size_t max_pair_table_length = 50'000;
};

/// Throws ErrorCode::LengthCapExceeded when length > limits.max_length.
void check_length(std::size_t length, const Limits& limits);

/// Tag for constructors that skip validation; callers guarantee the invariants.
struct unchecked_t {
    explicit unchecked_t() = default;
};
inline constexpr unchecked_t unchecked{};

/// Factorial-number-system digits (a_0, ..., a_{s-1}) with 0 <= a_i <= i.
class FactoradicDigits {
public:
    explicit FactoradicDigits(std::vector<Digit> digits);
    FactoradicDigits(std::initializer_list<Digit> digits);
    FactoradicDigits(unchecked_t, std::vector<Digit> digits) noexcept;

    std::size_t size() const noexcept { return digits_.size(); }
    Digit operator[](std::size_t i) const noexcept { return digits_[i]; }
    std::span<const Digit> values() const noexcept { return digits_; }

    /// Same digits with trailing zeros removed, keeping at least one digit.
    FactoradicDigits trimmed() const;

    /// Pads with zeros up to `length` (never shortens).
    FactoradicDigits padded(std::size_t length) const;

    friend bool operator==(const FactoradicDigits&, const FactoradicDigits&) = default;

private:
    std::vector<Digit> digits_;
};

/// Finite sequence of distinct non-negative integers; the entry set is arbitrary.
class PermutationPrefix {
public:
    explicit PermutationPrefix(std::vector<Entry> entries);
    PermutationPrefix(std::initializer_list<Entry> entries);
    PermutationPrefix(unchecked_t, std::vector<Entry> entries) noexcept;

    std::size_t size() const noexcept { return entries_.size(); }
    Entry operator[](std::size_t i) const noexcept { return entries_[i]; }
    std::span<const Entry> entries() const noexcept { return entries_; }

    /// First `length` entries. Throws PrefixTooShort if fewer are available.
    PermutationPrefix first(std::size_t length) const;

    /// True when the entry set is exactly {0, ..., size()-1}.
    bool is_complete() const noexcept;

    friend bool operator==(const PermutationPrefix&, const PermutationPrefix&) = default;

private:
    std::vector<Entry> entries_;
};

/// A tame permutation of the non-negative integers written as its first s
/// values; the entry set is exactly {0, ..., s-1} and every later position is
/// a fixed point. Equality ignores trailing fixed points, so (1, 0) == (1, 0, 2).
class TamePermutation {
public:
    explicit TamePermutation(std::vector<Entry> entries);
    TamePermutation(std::initializer_list<Entry> entries);
    TamePermutation(unchecked_t, std::vector<Entry> entries) noexcept;
    explicit TamePermutation(const PermutationPrefix& prefix);

    std::size_t size() const noexcept { return entries_.size(); }
    Entry operator[](std::size_t i) const noexcept { return entries_[i]; }
    std::span<const Entry> entries() const noexcept { return entries_; }

    /// Value at position i of the infinite sequence form.
    Entry at(std::size_t i) const noexcept { return i < entries_.size() ? entries_[i] : i; }

    /// Shortest writing: trailing fixed points stripped, at least one entry.
    TamePermutation canonical() const;

    /// The writing of length `length` (pads with fixed points or strips them).
    /// Throws PrefixTooShort if non-fixed positions would be cut off.
    TamePermutation with_length(std::size_t length) const;

    PermutationPrefix as_prefix() const { return PermutationPrefix(unchecked, entries_); }

    friend bool operator==(const TamePermutation& a, const TamePermutation& b) noexcept;

private:
    std::vector<Entry> entries_;
};

}  // namespace factoradic

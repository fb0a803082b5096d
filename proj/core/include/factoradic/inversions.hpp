#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "factoradic/types.hpp"

namespace factoradic {

/// inv(i, j) for 0 <= i < j < s, indexed by prefix position: inv(i, j) = 1
/// iff the entry at position i exceeds the entry at position j. Stored as a
/// packed strictly-lower-triangular bit table, row j holding positions i < j.
class InversionSet {
public:
    explicit InversionSet(std::size_t size);

    std::size_t size() const noexcept { return size_; }

    /// Requires i < j < size(); throws std::out_of_range otherwise.
    bool contains(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j);

    /// Number of i < j with inv(i, j) = 1.
    std::size_t column_count(std::size_t j) const;

    /// Total number of 1-pairs.
    std::size_t count() const;

    /// All 1-pairs ordered by (i, j).
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    /// Bit index of inv(0, j); row j spans j bits.
    static std::size_t row_offset(std::size_t j) noexcept { return j == 0 ? 0 : j * (j - 1) / 2; }

    friend bool operator==(const InversionSet&, const InversionSet&) = default;

private:
    friend InversionSet inversion_set(const PermutationPrefix&, const Limits&);

    std::size_t size_;
    std::vector<std::uint64_t> bits_;
};

/// Inversion set of a prefix. Runs in O(s^2 / 64) word operations.
/// Throws LengthCapExceeded above limits.max_pair_table_length.
InversionSet inversion_set(const PermutationPrefix& prefix, const Limits& limits = {});

/// c_j = sum_{i<j} inv(i, j).
FactoradicDigits inversion_counts_by_larger(const InversionSet& set);

/// Counts-only form of inversion_set followed by inversion_counts_by_larger:
/// O(s) memory, O(s log s) time.
FactoradicDigits inversion_counts(const PermutationPrefix& prefix);

}  // namespace factoradic

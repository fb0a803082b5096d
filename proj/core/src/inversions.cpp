#include "factoradic/inversions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "factoradic/codec.hpp"
#include "factoradic/error.hpp"

namespace factoradic {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// ORs the low `nbits` bits of `src` into `dst` starting at bit `offset`.
void or_bits(std::vector<std::uint64_t>& dst, std::size_t offset,
             const std::vector<std::uint64_t>& src, std::size_t nbits) {
    std::size_t shift = offset % 64;
    std::size_t base = offset / 64;
    for (std::size_t w = 0; w * 64 < nbits; ++w) {
        std::uint64_t word = src[w];
        std::size_t remaining = nbits - w * 64;
        if (remaining < 64) {
            word &= (std::uint64_t{1} << remaining) - 1;
        }
        dst[base + w] |= word << shift;
        if (shift != 0 && word >> (64 - shift) != 0) {
            dst[base + w + 1] |= word >> (64 - shift);
        }
    }
}

}  // namespace

InversionSet::InversionSet(std::size_t size)
    : size_(size), bits_(words_for(size * (size - (size > 0)) / 2), 0) {}

bool InversionSet::contains(std::size_t i, std::size_t j) const {
    if (!(i < j && j < size_)) {
        throw std::out_of_range("inversion pair (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside size " + std::to_string(size_));
    }
    std::size_t bit = row_offset(j) + i;
    return (bits_[bit / 64] >> (bit % 64)) & 1U;
}

void InversionSet::set(std::size_t i, std::size_t j) {
    if (!(i < j && j < size_)) {
        throw std::out_of_range("inversion pair (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside size " + std::to_string(size_));
    }
    std::size_t bit = row_offset(j) + i;
    bits_[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

std::size_t InversionSet::column_count(std::size_t j) const {
    if (j >= size_) {
        throw std::out_of_range("column " + std::to_string(j) + " outside size " +
                                std::to_string(size_));
    }
    std::size_t begin = row_offset(j);
    std::size_t end = begin + j;
    std::size_t total = 0;
    std::size_t bit = begin;
    while (bit < end) {
        std::size_t in_word = bit % 64;
        std::size_t take = std::min<std::size_t>(64 - in_word, end - bit);
        std::uint64_t word = bits_[bit / 64] >> in_word;
        if (take < 64) {
            word &= (std::uint64_t{1} << take) - 1;
        }
        total += static_cast<std::size_t>(std::popcount(word));
        bit += take;
    }
    return total;
}

std::size_t InversionSet::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : bits_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::vector<std::pair<std::size_t, std::size_t>> InversionSet::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = i + 1; j < size_; ++j) {
            if (contains(i, j)) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

InversionSet inversion_set(const PermutationPrefix& prefix, const Limits& limits) {
    if (prefix.size() > limits.max_pair_table_length) {
        throw Error(ErrorCode::LengthCapExceeded,
                    "pair table for length " + std::to_string(prefix.size()) + " exceeds cap " +
                        std::to_string(limits.max_pair_table_length));
    }
    std::size_t s = prefix.size();
    auto entries = prefix.entries();

    // Visit positions from the largest entry down. When position j is
    // visited, `greater` marks exactly the positions holding larger entries,
    // so row j is `greater` restricted to [0, j).
    std::vector<std::size_t> order(s);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return entries[a] > entries[b]; });

    InversionSet set(s);
    std::vector<std::uint64_t> greater(words_for(s), 0);
    for (std::size_t j : order) {
        or_bits(set.bits_, InversionSet::row_offset(j), greater, j);
        greater[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return set;
}

FactoradicDigits inversion_counts_by_larger(const InversionSet& set) {
    std::vector<Digit> counts(set.size());
    for (std::size_t j = 0; j < set.size(); ++j) {
        counts[j] = static_cast<Digit>(set.column_count(j));
    }
    return FactoradicDigits(unchecked, std::move(counts));
}

FactoradicDigits inversion_counts(const PermutationPrefix& prefix) {
    return digits_from_permutation(prefix);
}

}  // namespace factoradic

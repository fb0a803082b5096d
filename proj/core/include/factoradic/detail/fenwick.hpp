#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace factoradic::detail {

// Binary indexed tree of per-slot counts over slots [0, size). Used both as
// an inversion counter (prefix sums) and as an order-statistics pool
// (select the k-th occupied slot).
class FenwickTree {
public:
    explicit FenwickTree(std::size_t size) : tree_(size + 1, 0) {}

    /// Every slot starts with count 1. Linear-time construction.
    static FenwickTree filled(std::size_t size) {
        FenwickTree t(size);
        for (std::size_t i = 1; i <= size; ++i) {
            t.tree_[i] += 1;
            std::size_t parent = i + (i & (~i + 1));
            if (parent <= size) {
                t.tree_[parent] += t.tree_[i];
            }
        }
        return t;
    }

    std::size_t size() const noexcept { return tree_.size() - 1; }

    void add(std::size_t slot, std::int64_t delta) noexcept {
        for (std::size_t i = slot + 1; i < tree_.size(); i += i & (~i + 1)) {
            tree_[i] += delta;
        }
    }

    /// Sum of counts in slots [0, end).
    std::int64_t prefix_sum(std::size_t end) const noexcept {
        std::int64_t s = 0;
        for (std::size_t i = end; i > 0; i &= i - 1) {
            s += tree_[i];
        }
        return s;
    }

    /// Smallest slot whose inclusive prefix sum exceeds `rank` (0-based rank
    /// among occupied slots). Requires 0 <= rank < total count.
    std::size_t select(std::int64_t rank) const noexcept {
        std::size_t pos = 0;
        for (std::size_t step = std::bit_floor(size()); step > 0; step >>= 1) {
            std::size_t next = pos + step;
            if (next < tree_.size() && tree_[next] <= rank) {
                pos = next;
                rank -= tree_[next];
            }
        }
        return pos;
    }

private:
    std::vector<std::int64_t> tree_;
};

}  // namespace factoradic::detail

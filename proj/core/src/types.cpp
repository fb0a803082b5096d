#include "factoradic/types.hpp"

#include <algorithm>
#include <string>

#include "factoradic/error.hpp"

namespace factoradic {

namespace {

void check_distinct(std::span<const Entry> entries) {
    std::vector<Entry> sorted(entries.begin(), entries.end());
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw Error(ErrorCode::DuplicateEntry, "entry " + std::to_string(*dup) + " repeats");
    }
}

bool covers_initial_segment(std::span<const Entry> entries) {
    std::vector<bool> seen(entries.size(), false);
    for (Entry e : entries) {
        if (e >= entries.size() || seen[e]) {
            return false;
        }
        seen[e] = true;
    }
    return true;
}

std::size_t stripped_length(std::span<const Entry> entries) {
    std::size_t len = entries.size();
    while (len > 1 && entries[len - 1] == len - 1) {
        --len;
    }
    return len;
}

}  // namespace

void check_length(std::size_t length, const Limits& limits) {
    if (length > limits.max_length) {
        throw Error(ErrorCode::LengthCapExceeded,
                    "length " + std::to_string(length) + " exceeds cap " +
                        std::to_string(limits.max_length));
    }
}

// FactoradicDigits

FactoradicDigits::FactoradicDigits(std::vector<Digit> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) {
        throw Error(ErrorCode::EmptySequence, "digit sequence must have at least one digit");
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] > i) {
            throw Error(ErrorCode::InvalidDigit, "digit a_" + std::to_string(i) + " = " +
                                                     std::to_string(digits_[i]) + " exceeds " +
                                                     std::to_string(i));
        }
    }
}

FactoradicDigits::FactoradicDigits(std::initializer_list<Digit> digits)
    : FactoradicDigits(std::vector<Digit>(digits)) {}

FactoradicDigits::FactoradicDigits(unchecked_t, std::vector<Digit> digits) noexcept
    : digits_(std::move(digits)) {}

FactoradicDigits FactoradicDigits::trimmed() const {
    std::size_t len = digits_.size();
    while (len > 1 && digits_[len - 1] == 0) {
        --len;
    }
    return FactoradicDigits(unchecked, std::vector<Digit>(digits_.begin(), digits_.begin() + len));
}

FactoradicDigits FactoradicDigits::padded(std::size_t length) const {
    std::vector<Digit> out = digits_;
    if (out.size() < length) {
        out.resize(length, 0);
    }
    return FactoradicDigits(unchecked, std::move(out));
}

// PermutationPrefix

PermutationPrefix::PermutationPrefix(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw Error(ErrorCode::EmptySequence, "permutation must have at least one entry");
    }
    check_distinct(entries_);
}

PermutationPrefix::PermutationPrefix(std::initializer_list<Entry> entries)
    : PermutationPrefix(std::vector<Entry>(entries)) {}

PermutationPrefix::PermutationPrefix(unchecked_t, std::vector<Entry> entries) noexcept
    : entries_(std::move(entries)) {}

PermutationPrefix PermutationPrefix::first(std::size_t length) const {
    if (length > entries_.size()) {
        throw Error(ErrorCode::PrefixTooShort, "prefix has " + std::to_string(entries_.size()) +
                                                   " entries, need " + std::to_string(length));
    }
    return PermutationPrefix(unchecked,
                             std::vector<Entry>(entries_.begin(), entries_.begin() + length));
}

bool PermutationPrefix::is_complete() const noexcept { return covers_initial_segment(entries_); }

// TamePermutation

TamePermutation::TamePermutation(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw Error(ErrorCode::EmptySequence, "permutation must have at least one entry");
    }
    if (!covers_initial_segment(entries_)) {
        throw Error(ErrorCode::NotAPermutation,
                    "entries are not a permutation of {0, ..., " +
                        std::to_string(entries_.size() - 1) + "}");
    }
}

TamePermutation::TamePermutation(std::initializer_list<Entry> entries)
    : TamePermutation(std::vector<Entry>(entries)) {}

TamePermutation::TamePermutation(unchecked_t, std::vector<Entry> entries) noexcept
    : entries_(std::move(entries)) {}

TamePermutation::TamePermutation(const PermutationPrefix& prefix)
    : TamePermutation(std::vector<Entry>(prefix.entries().begin(), prefix.entries().end())) {}

TamePermutation TamePermutation::canonical() const {
    return with_length(stripped_length(entries_));
}

TamePermutation TamePermutation::with_length(std::size_t length) const {
    if (length < stripped_length(entries_) || length == 0) {
        throw Error(ErrorCode::PrefixTooShort,
                    "length " + std::to_string(length) + " would drop moved positions");
    }
    std::vector<Entry> out(length);
    for (std::size_t i = 0; i < length; ++i) {
        out[i] = at(i);
    }
    return TamePermutation(unchecked, std::move(out));
}

bool operator==(const TamePermutation& a, const TamePermutation& b) noexcept {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.at(i) != b.at(i)) {
            return false;
        }
    }
    return true;
}

}  // namespace factoradic

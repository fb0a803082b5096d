#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "factoradic/inversions.hpp"
#include "factoradic/types.hpp"

namespace factoradic {

enum class Format { plain, latex, json };

Format parse_format(std::string_view name);
std::string_view to_string(Format format) noexcept;

/// "(2, 3, 0, 1)".
std::string format_sequence(std::span<const Entry> entries);
std::string format_sequence(const FactoradicDigits& digits);

/// Accepts "(2, 3, 0, 1)", "2,3,0,1" or "2 3 0 1", with surrounding whitespace.
std::vector<Entry> parse_entries(std::string_view text);

/// Sorted 1-pairs: "(0,2) (0,3) (1,2) (1,3)". Empty for the empty set.
std::string format_inversions(const InversionSet& set);

/// {"s":4,"pairs":[[0,2],[0,3],[1,2],[1,3]]}
std::string inversions_json(const InversionSet& set);

}  // namespace factoradic

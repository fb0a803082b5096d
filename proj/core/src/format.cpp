#include "factoradic/format.hpp"

#include <cctype>
#include <charconv>

#include <json.hpp>

#include "factoradic/error.hpp"

namespace factoradic {

namespace {

template <typename Range>
std::string join_parenthesized(const Range& values) {
    std::string out = "(";
    bool first = true;
    for (auto v : values) {
        if (!first) {
            out += ", ";
        }
        out += std::to_string(v);
        first = false;
    }
    out += ')';
    return out;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "plain") return Format::plain;
    if (name == "latex") return Format::latex;
    if (name == "json") return Format::json;
    throw Error(ErrorCode::ParseError, "unknown format '" + std::string(name) + "'");
}

std::string_view to_string(Format format) noexcept {
    switch (format) {
        case Format::plain: return "plain";
        case Format::latex: return "latex";
        case Format::json: return "json";
    }
    return "plain";
}

std::string format_sequence(std::span<const Entry> entries) { return join_parenthesized(entries); }

std::string format_sequence(const FactoradicDigits& digits) {
    return join_parenthesized(digits.values());
}

std::vector<Entry> parse_entries(std::string_view text) {
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') {
            throw Error(ErrorCode::ParseError, "unbalanced parenthesis in '" + std::string(text) + "'");
        }
        body = trim(body.substr(1, body.size() - 2));
    }
    std::vector<Entry> out;
    std::size_t pos = 0;
    bool expect_value = true;
    while (pos < body.size()) {
        char c = body[pos];
        if (is_space(c)) {
            ++pos;
            continue;
        }
        if (c == ',') {
            if (expect_value) {
                throw Error(ErrorCode::ParseError, "misplaced ',' in '" + std::string(text) + "'");
            }
            expect_value = true;
            ++pos;
            continue;
        }
        Entry value = 0;
        auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), value);
        if (ec != std::errc() || ptr == body.data() + pos) {
            throw Error(ErrorCode::ParseError, "bad entry in '" + std::string(text) + "'");
        }
        pos = static_cast<std::size_t>(ptr - body.data());
        if (pos < body.size() && !is_space(body[pos]) && body[pos] != ',') {
            throw Error(ErrorCode::ParseError, "bad entry in '" + std::string(text) + "'");
        }
        out.push_back(value);
        expect_value = false;
    }
    if (out.empty()) {
        throw Error(ErrorCode::EmptySequence, "no entries in '" + std::string(text) + "'");
    }
    if (expect_value) {
        throw Error(ErrorCode::ParseError, "trailing ',' in '" + std::string(text) + "'");
    }
    return out;
}

std::string format_inversions(const InversionSet& set) {
    std::string out;
    for (auto [i, j] : set.pairs()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += '(' + std::to_string(i) + ',' + std::to_string(j) + ')';
    }
    return out;
}

std::string inversions_json(const InversionSet& set) {
    nlohmann::ordered_json doc;
    doc["s"] = set.size();
    doc["pairs"] = nlohmann::ordered_json::array();
    for (auto [i, j] : set.pairs()) {
        doc["pairs"].push_back({i, j});
    }
    return doc.dump();
}

}  // namespace factoradic

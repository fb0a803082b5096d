#include "factoradic/rules.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "factoradic/detail/wide.hpp"
#include "factoradic/error.hpp"
#include "factoradic/inversions.hpp"

namespace factoradic {

namespace {

bool is_prime(Modulus k) {
    if (k < 2) return false;
    for (Modulus d = 2; d * d <= k; ++d) {
        if (k % d == 0) return false;
    }
    return true;
}

struct Group {
    std::int64_t coefficient;
    std::vector<const RuleTerm*> terms;
};

// Maximal runs of consecutive columns with one coefficient, pairs in (i, j) order.
std::vector<Group> column_groups(const DivisibilityRule& rule) {
    std::vector<Group> groups;
    std::size_t last_column = 0;
    for (const RuleTerm& t : rule.terms) {
        bool extends = !groups.empty() && groups.back().coefficient == t.coefficient &&
                       (t.j == last_column || t.j == last_column + 1);
        if (!extends) {
            groups.push_back(Group{t.coefficient, {}});
        }
        groups.back().terms.push_back(&t);
        last_column = t.j;
    }
    for (Group& g : groups) {
        std::sort(g.terms.begin(), g.terms.end(), [](const RuleTerm* a, const RuleTerm* b) {
            return a->i != b->i ? a->i < b->i : a->j < b->j;
        });
    }
    return groups;
}

std::string pair_text(const RuleTerm& t, Format format) {
    if (format == Format::latex) {
        return "\\inv{" + std::to_string(t.i) + ", " + std::to_string(t.j) + "}";
    }
    return "inv(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

std::string render_linear(const DivisibilityRule& rule, Format format) {
    std::string out;
    auto emit_sign = [&](bool negative) {
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
    };
    for (const Group& g : column_groups(rule)) {
        bool negative = g.coefficient < 0;
        std::int64_t magnitude = std::abs(g.coefficient);
        if (magnitude == 1) {
            for (const RuleTerm* t : g.terms) {
                emit_sign(negative);
                out += pair_text(*t, format);
            }
            continue;
        }
        emit_sign(negative);
        out += std::to_string(magnitude);
        out += format == Format::latex ? "\\left(" : "(";
        for (std::size_t n = 0; n < g.terms.size(); ++n) {
            if (n > 0) out += " + ";
            out += pair_text(*g.terms[n], format);
        }
        out += format == Format::latex ? "\\right)" : ")";
    }
    return out.empty() ? "0" : out;
}

nlohmann::ordered_json rule_json(const DivisibilityRule& rule) {
    nlohmann::ordered_json doc;
    doc["k"] = rule.modulus;
    doc["terms"] = nlohmann::ordered_json::array();
    for (const RuleTerm& t : rule.terms) {
        nlohmann::ordered_json term;
        term["i"] = t.i;
        term["j"] = t.j;
        term["c"] = t.coefficient;
        doc["terms"].push_back(std::move(term));
    }
    return doc;
}

}  // namespace

std::int64_t balanced_residue(std::uint64_t c, Modulus k) {
    c %= k;
    if (c > k / 2) {
        return -static_cast<std::int64_t>(k - c);
    }
    return static_cast<std::int64_t>(c);
}

DivisibilityRule generate_rule(Modulus k, const Limits& limits) {
    if (k < 2) {
        throw Error(ErrorCode::ModulusTooSmall, "rules need modulus >= 2, got " + std::to_string(k));
    }
    std::size_t columns = std::min<std::size_t>(static_cast<std::size_t>(k), kempner(k));
    if (columns > limits.max_pair_table_length) {
        throw Error(ErrorCode::LengthCapExceeded,
                    "rule for k = " + std::to_string(k) + " spans " + std::to_string(columns) +
                        " columns");
    }
    DivisibilityRule rule;
    rule.modulus = k;
    rule.effective_length = columns;
    std::vector<std::uint64_t> coeff = factorial_residues(k, columns);
    for (std::size_t j = 1; j < columns; ++j) {
        if (coeff[j] == 0) continue;
        std::int64_t c = balanced_residue(coeff[j], k);
        for (std::size_t i = 0; i < j; ++i) {
            rule.terms.push_back(RuleTerm{i, j, c});
        }
    }
    return rule;
}

Residue evaluate_rule(const DivisibilityRule& rule, const PermutationPrefix& prefix) {
    if (prefix.size() < rule.effective_length) {
        throw Error(ErrorCode::PrefixTooShort,
                    "prefix has " + std::to_string(prefix.size()) + " entries, rule needs " +
                        std::to_string(rule.effective_length));
    }
    InversionSet inv = inversion_set(prefix.first(rule.effective_length),
                                     Limits{.max_pair_table_length = rule.effective_length});
    Modulus k = rule.modulus;
    std::uint64_t acc = 0;
    for (const RuleTerm& t : rule.terms) {
        if (inv.contains(t.i, t.j)) {
            std::uint64_t c = t.coefficient < 0 ? k - static_cast<std::uint64_t>(-t.coefficient)
                                                : static_cast<std::uint64_t>(t.coefficient);
            acc = detail::add_mod(acc, c, k);
        }
    }
    return Residue{acc, k};
}

std::string render_rule(const DivisibilityRule& rule, Format format) {
    if (format == Format::json) {
        return rule_json(rule).dump();
    }
    return render_linear(rule, format);
}

std::vector<DivisibilityRule> rule_table(Modulus k_max, bool primes_only, const Limits& limits) {
    std::vector<DivisibilityRule> rules;
    for (Modulus k = 2; k <= k_max; ++k) {
        if (primes_only && !is_prime(k)) continue;
        rules.push_back(generate_rule(k, limits));
    }
    return rules;
}

std::string render_table_json(const std::vector<DivisibilityRule>& rules) {
    auto doc = nlohmann::ordered_json::array();
    for (const DivisibilityRule& r : rules) {
        doc.push_back(rule_json(r));
    }
    return doc.dump();
}

}  // namespace factoradic

#include <gtest/gtest.h>

#include <map>
#include <random>

#include <json.hpp>

#include "factoradic/codec.hpp"
#include "factoradic/error.hpp"
#include "factoradic/rules.hpp"
#include "oracles.hpp"

using namespace factoradic;

namespace {

std::map<std::pair<std::size_t, std::size_t>, std::int64_t> as_map(const DivisibilityRule& r) {
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> m;
    for (const RuleTerm& t : r.terms) m[{t.i, t.j}] = t.coefficient;
    return m;
}

PermutationPrefix encode_prefix(unsigned long n, Modulus k) {
    Integer reduced = Integer(n) % factorial(static_cast<std::size_t>(k));
    return encode(reduced, static_cast<std::size_t>(k)).as_prefix();
}

}  // namespace

TEST(GenerateRule, Examples) {
    EXPECT_EQ(as_map(generate_rule(3)), (std::map<std::pair<std::size_t, std::size_t>, std::int64_t>{
                                            {{0, 1}, 1}, {{0, 2}, -1}, {{1, 2}, -1}}));
    DivisibilityRule six = generate_rule(6);
    EXPECT_EQ(six.effective_length, 3u);
    EXPECT_EQ(as_map(six), (std::map<std::pair<std::size_t, std::size_t>, std::int64_t>{
                               {{0, 1}, 1}, {{0, 2}, 2}, {{1, 2}, 2}}));
    DivisibilityRule five = generate_rule(5);
    EXPECT_EQ(five.terms.size(), 10u);
    std::map<std::size_t, std::int64_t> by_column;
    for (const RuleTerm& t : five.terms) by_column[t.j] = t.coefficient;
    EXPECT_EQ(by_column, (std::map<std::size_t, std::int64_t>{{1, 1}, {2, 2}, {3, 1}, {4, -1}}));
}

TEST(GenerateRule, TermsSortedByColumnThenRow) {
    DivisibilityRule r = generate_rule(7);
    for (std::size_t n = 1; n < r.terms.size(); ++n) {
        const RuleTerm& a = r.terms[n - 1];
        const RuleTerm& b = r.terms[n];
        EXPECT_TRUE(a.j < b.j || (a.j == b.j && a.i < b.i));
    }
}

TEST(GenerateRule, ModulusTooSmall) {
    for (Modulus k : {0u, 1u}) {
        try {
            generate_rule(k);
            ADD_FAILURE();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ModulusTooSmall);
        }
    }
}

TEST(BalancedResidue, Range) {
    EXPECT_EQ(balanced_residue(2, 3), -1);
    EXPECT_EQ(balanced_residue(1, 3), 1);
    EXPECT_EQ(balanced_residue(3, 6), 3);
    EXPECT_EQ(balanced_residue(4, 6), -2);
    EXPECT_EQ(balanced_residue(4, 5), -1);
    EXPECT_EQ(balanced_residue(2, 5), 2);
    EXPECT_EQ(balanced_residue(2, 4), 2);
}

TEST(EvaluateRule, Examples) {
    EXPECT_EQ(evaluate_rule(generate_rule(2), PermutationPrefix{1, 0}).value, 1u);
    EXPECT_EQ(evaluate_rule(generate_rule(6), PermutationPrefix{0, 1, 2, 3}).value, 0u);
    EXPECT_EQ(evaluate_rule(generate_rule(4), PermutationPrefix{2, 3, 0, 1}).value, 0u);
}

TEST(EvaluateRule, PrefixTooShort) {
    try {
        evaluate_rule(generate_rule(5), PermutationPrefix{1, 0, 2});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PrefixTooShort);
    }
    // k = 6 only reads the first S(6) = 3 entries.
    EXPECT_NO_THROW(evaluate_rule(generate_rule(6), PermutationPrefix{1, 0, 2}));
}

TEST(RenderRule, PlainGoldens) {
    EXPECT_EQ(render_rule(generate_rule(2), Format::plain), "inv(0,1)");
    EXPECT_EQ(render_rule(generate_rule(3), Format::plain), "inv(0,1) - inv(0,2) - inv(1,2)");
    EXPECT_EQ(render_rule(generate_rule(4), Format::plain),
              "inv(0,1) + 2(inv(0,2) + inv(0,3) + inv(1,2) + inv(1,3) + inv(2,3))");
    EXPECT_EQ(render_rule(generate_rule(5), Format::plain),
              "inv(0,1) + 2(inv(0,2) + inv(1,2)) + inv(0,3) + inv(1,3) + inv(2,3) - inv(0,4) - "
              "inv(1,4) - inv(2,4) - inv(3,4)");
    EXPECT_EQ(render_rule(generate_rule(6), Format::plain), "inv(0,1) + 2(inv(0,2) + inv(1,2))");
}

TEST(RenderRule, Latex) {
    EXPECT_EQ(render_rule(generate_rule(6), Format::latex),
              "\\inv{0, 1} + 2\\left(\\inv{0, 2} + \\inv{1, 2}\\right)");
    EXPECT_EQ(render_rule(generate_rule(3), Format::latex),
              "\\inv{0, 1} - \\inv{0, 2} - \\inv{1, 2}");
}

TEST(RenderRule, JsonSchema) {
    std::string text = render_rule(generate_rule(6), Format::json);
    EXPECT_EQ(text,
              R"({"k":6,"terms":[{"i":0,"j":1,"c":1},{"i":0,"j":2,"c":2},{"i":1,"j":2,"c":2}]})");
    auto doc = nlohmann::json::parse(render_rule(generate_rule(9), Format::json));
    EXPECT_EQ(doc["k"], 9);
    for (const auto& term : doc["terms"]) {
        EXPECT_LT(term["i"].get<int>(), term["j"].get<int>());
        EXPECT_NE(term["c"].get<int>(), 0);
    }
}

TEST(RuleTable, Examples) {
    auto six = rule_table(6);
    ASSERT_EQ(six.size(), 5u);
    for (std::size_t n = 0; n < six.size(); ++n) {
        EXPECT_EQ(six[n], generate_rule(n + 2));
    }
    EXPECT_EQ(rule_table(2).size(), 1u);
    std::vector<Modulus> primes;
    for (const auto& r : rule_table(30, true)) primes.push_back(r.modulus);
    EXPECT_EQ(primes, (std::vector<Modulus>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
    EXPECT_TRUE(rule_table(1).empty());
}

TEST(RuleTable, PrimeRulesAgreeWithDirectModulo) {
    std::mt19937_64 rng(41);
    const unsigned long bound = 3628800;  // 10!
    for (const auto& rule : rule_table(30, true)) {
        for (int round = 0; round < 300; ++round) {
            unsigned long n = rng() % bound;
            ASSERT_EQ(evaluate_rule(rule, encode_prefix(n, rule.modulus)).value, n % rule.modulus)
                << rule.modulus << " " << n;
        }
    }
}

TEST(RuleTable, JsonArray) {
    auto doc = nlohmann::json::parse(render_table_json(rule_table(4)));
    ASSERT_TRUE(doc.is_array());
    EXPECT_EQ(doc.size(), 3u);
    EXPECT_EQ(doc[2]["k"], 4);
}

// Properties

TEST(RulesProperty, AgreesWithResidueOnAllSmallInputs) {
    for (Modulus k = 2; k <= 12; ++k) {
        DivisibilityRule rule = generate_rule(k);
        for (unsigned long n = 0; n < 40320; n += (k > 8 ? 7 : 1)) {
            ASSERT_EQ(evaluate_rule(rule, encode_prefix(n, k)).value, n % k) << k << " " << n;
        }
    }
}

TEST(RulesProperty, ColumnConstancyAndCutoff) {
    for (Modulus k = 2; k <= 120; ++k) {
        DivisibilityRule rule = generate_rule(k);
        std::size_t cutoff = kempner(k);
        EXPECT_EQ(rule.effective_length, std::min<std::size_t>(k, cutoff));
        std::map<std::size_t, std::int64_t> column;
        std::map<std::size_t, std::size_t> rows;
        for (const RuleTerm& t : rule.terms) {
            ASSERT_LT(t.i, t.j);
            ASSERT_LT(t.j, cutoff);
            ASSERT_NE(t.coefficient, 0);
            auto [it, fresh] = column.emplace(t.j, t.coefficient);
            ASSERT_EQ(it->second, t.coefficient) << k;
            ++rows[t.j];
        }
        // Every column below the cutoff is present with all j rows.
        for (std::size_t j = 1; j < cutoff; ++j) {
            ASSERT_EQ(rows[j], j) << k << " column " << j;
        }
    }
}

TEST(RulesProperty, BalancedCoefficientsRoundTrip) {
    for (Modulus k = 2; k <= 200; ++k) {
        auto raw = factorial_residues(k, kempner(k));
        for (const RuleTerm& t : generate_rule(k).terms) {
            std::int64_t c = t.coefficient;
            auto sk = static_cast<std::int64_t>(k);
            ASSERT_EQ(static_cast<std::uint64_t>(((c % sk) + sk) % sk), raw[t.j]);
            ASSERT_GT(c, -(sk + 1) / 2);
            ASSERT_LE(c, sk / 2);
        }
    }
}

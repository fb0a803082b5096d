#include <gtest/gtest.h>

#include <random>
#include <set>

#include "factoradic/codec.hpp"
#include "factoradic/error.hpp"
#include "factoradic/inversions.hpp"
#include "factoradic/reference.hpp"
#include "oracles.hpp"

using namespace factoradic;
using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

TEST(InversionSet, Examples) {
    InversionSet set = inversion_set(PermutationPrefix{2, 3, 0, 1});
    EXPECT_EQ(set.pairs(), (Pairs{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    EXPECT_EQ(inversion_set(PermutationPrefix{0, 1, 2, 3}).count(), 0u);
    InversionSet two = inversion_set(PermutationPrefix{5, 9});
    EXPECT_FALSE(two.contains(0, 1));
}

TEST(InversionSet, PairsIndexPositionsNotValues) {
    // (2, 0, 1, 3) is 3 in the table: inv(0,1) + inv(0,2) weighted 1! + 2!.
    InversionSet set = inversion_set(PermutationPrefix{2, 0, 1, 3});
    EXPECT_EQ(set.pairs(), (Pairs{{0, 1}, {0, 2}}));
    EXPECT_EQ(reference::weighted_inversion_sum(set), 3);
}

TEST(InversionSet, TableOneRowsSumToTheirIndex) {
    for (std::size_t n = 0; n < support::kTableOne.size(); ++n) {
        InversionSet set = inversion_set(PermutationPrefix(support::kTableOne[n]));
        EXPECT_EQ(reference::weighted_inversion_sum(set), static_cast<unsigned long>(n)) << n;
    }
}

TEST(InversionSet, ContainsRejectsInvalidPairs) {
    InversionSet set = inversion_set(PermutationPrefix{1, 0, 2});
    EXPECT_THROW(set.contains(1, 1), std::out_of_range);
    EXPECT_THROW(set.contains(2, 1), std::out_of_range);
    EXPECT_THROW(set.contains(0, 3), std::out_of_range);
    EXPECT_THROW(set.column_count(3), std::out_of_range);
}

TEST(InversionSet, PairTableCap) {
    std::vector<Entry> p(20);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    try {
        inversion_set(PermutationPrefix(p), Limits{.max_pair_table_length = 10});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthCapExceeded);
    }
}

TEST(InversionCountsByLarger, Examples) {
    EXPECT_EQ(inversion_counts_by_larger(inversion_set(PermutationPrefix{2, 3, 0, 1})),
              (FactoradicDigits{0, 0, 2, 2}));
    EXPECT_EQ(inversion_counts_by_larger(InversionSet(4)), (FactoradicDigits{0, 0, 0, 0}));
    EXPECT_EQ(inversion_counts_by_larger(inversion_set(PermutationPrefix{3, 2, 1, 0})),
              (FactoradicDigits{0, 1, 2, 3}));
}

TEST(InversionsProperty, MatchesBruteForceAcrossWordBoundaries) {
    std::mt19937_64 rng(21);
    for (std::size_t s : {1u, 2u, 63u, 64u, 65u, 127u, 128u, 129u, 300u}) {
        for (int round = 0; round < 5; ++round) {
            PermutationPrefix p(support::random_prefix(s, 4 * s + 1, rng));
            ASSERT_EQ(inversion_set(p), reference::inversions_bruteforce(p)) << s;
        }
    }
}

TEST(InversionsProperty, RankInvariance) {
    std::mt19937_64 rng(22);
    for (int round = 0; round < 200; ++round) {
        std::size_t s = 1 + rng() % 120;
        std::vector<Entry> p = support::random_permutation(s, rng);
        // Strictly increasing relabelling: v -> sum of random positive gaps.
        std::vector<Entry> image(s);
        Entry acc = rng() % 50;
        for (std::size_t v = 0; v < s; ++v) {
            acc += 1 + rng() % 1000;
            image[v] = acc;
        }
        std::vector<Entry> relabelled(s);
        for (std::size_t i = 0; i < s; ++i) relabelled[i] = image[p[i]];
        ASSERT_EQ(inversion_set(PermutationPrefix(p)), inversion_set(PermutationPrefix(relabelled)));
    }
}

TEST(InversionsProperty, CountBound) {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 100; ++round) {
        std::size_t s = 1 + rng() % 200;
        FactoradicDigits c = inversion_counts_by_larger(
            inversion_set(PermutationPrefix(support::random_prefix(s, 1000, rng))));
        for (std::size_t j = 0; j < s; ++j) ASSERT_LE(c[j], j);
    }
}

TEST(InversionsProperty, ReversalIsExtremal) {
    for (std::size_t s = 1; s <= 12; ++s) {
        std::vector<Entry> rev(s);
        for (std::size_t i = 0; i < s; ++i) rev[i] = s - 1 - i;
        InversionSet set = inversion_set(PermutationPrefix(rev));
        EXPECT_EQ(set.count(), s * (s - 1) / 2);
        EXPECT_EQ(decode(TamePermutation(rev)), factorial(s) - 1);
    }
}

TEST(InversionsProperty, CountsOnlyModeAgrees) {
    std::mt19937_64 rng(24);
    for (int round = 0; round < 100; ++round) {
        std::size_t s = 1 + rng() % 150;
        PermutationPrefix p(support::random_prefix(s, 500, rng));
        ASSERT_EQ(inversion_counts(p), inversion_counts_by_larger(inversion_set(p)));
    }
}

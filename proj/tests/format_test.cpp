#include <gtest/gtest.h>

#include <json.hpp>

#include "factoradic/error.hpp"
#include "factoradic/format.hpp"

using namespace factoradic;

TEST(ParseEntries, AcceptedSpellings) {
    std::vector<Entry> expected{2, 3, 0, 1};
    for (const char* text : {"(2, 3, 0, 1)", "(2,3,0,1)", "2,3,0,1", "2 3 0 1", "  (2, 3, 0, 1)\n",
                             "2, 3 0,1", "( 2 3 0 1 )"}) {
        EXPECT_EQ(parse_entries(text), expected) << text;
    }
    EXPECT_EQ(parse_entries("(0)"), (std::vector<Entry>{0}));
}

TEST(ParseEntries, Rejected) {
    for (const char* text : {"(2, 3", "2,,3", ",2", "2,", "2 -3", "a", "(1.5)", "2 3)"}) {
        try {
            parse_entries(text);
            ADD_FAILURE() << "accepted '" << text << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << text;
        }
    }
    for (const char* text : {"", "()", "  "}) {
        try {
            parse_entries(text);
            ADD_FAILURE() << "accepted '" << text << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::EmptySequence) << text;
        }
    }
}

TEST(FormatSequence, ParenthesizedStyle) {
    std::vector<Entry> p{2, 3, 0, 1};
    EXPECT_EQ(format_sequence(p), "(2, 3, 0, 1)");
    EXPECT_EQ(format_sequence(FactoradicDigits{0}), "(0)");
    EXPECT_EQ(parse_entries(format_sequence(p)), p);
}

TEST(FormatInversions, TextAndJson) {
    InversionSet set(4);
    set.set(1, 3);
    set.set(0, 2);
    EXPECT_EQ(format_inversions(set), "(0,2) (1,3)");
    EXPECT_EQ(inversions_json(set), R"({"s":4,"pairs":[[0,2],[1,3]]})");
    EXPECT_EQ(format_inversions(InversionSet(3)), "");
    auto doc = nlohmann::json::parse(inversions_json(InversionSet(1)));
    EXPECT_EQ(doc["s"], 1);
    EXPECT_TRUE(doc["pairs"].empty());
}

TEST(Format, Names) {
    EXPECT_EQ(parse_format("plain"), Format::plain);
    EXPECT_EQ(parse_format("latex"), Format::latex);
    EXPECT_EQ(parse_format("json"), Format::json);
    EXPECT_EQ(to_string(Format::json), "json");
    EXPECT_THROW(parse_format("xml"), Error);
}

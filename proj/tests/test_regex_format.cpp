#include <gtest/gtest.h>

#include <filesystem>

#include "oracles.hpp"

using namespace qlang;

TEST(Regex, PrecedenceStarProductUnion) {
    Regex r = parse_regex("ab*|c");
    ASSERT_EQ(r.kind, Regex::Kind::union_of);
    EXPECT_EQ(r.operands[0].kind, Regex::Kind::product);
    EXPECT_EQ(r.operands[0].operands[1].kind, Regex::Kind::star);
    EXPECT_EQ(r.operands[1], Regex::symbol('c'));
}

TEST(Regex, AsciiAndUnicodeSpellingsAgree) {
    const Alphabet ab("ab");
    EXPECT_EQ(regex_to_language("(ε∪a)*b", ab), regex_to_language("(1|a)*b", ab));
    EXPECT_EQ(regex_to_language("a∪b", ab), regex_to_language("a+b", ab));
    EXPECT_EQ(regex_to_language("∅*", ab), regex_to_language("1", ab));
    EXPECT_EQ(regex_to_language("a 0", ab), Language::empty(ab));
    EXPECT_EQ(regex_to_language(" ( a ) ", ab), Language::word(ab, "a"));
}

TEST(Regex, PrintsParseableAscii) {
    for (const char* text : {"(ε∪a)*b", "a(b|c)*", "((a))**", "0|1", "ab|ba|1"}) {
        Regex r = parse_regex(text);
        EXPECT_EQ(parse_regex(to_string(r)), r) << text;
    }
}

TEST(Regex, SyntaxErrorsCarryPosition) {
    auto position = [](std::string_view text) -> std::size_t {
        try {
            parse_regex(text);
        } catch (const regex_syntax_error& e) {
            return e.position();
        }
        return 0;
    };
    EXPECT_EQ(position("(ab"), 4u);
    EXPECT_EQ(position("a)"), 2u);
    EXPECT_EQ(position("*a"), 1u);
    EXPECT_EQ(position("ε∪)"), 3u);
    EXPECT_EQ(position("a|"), 3u);
    EXPECT_EQ(position("a#"), 2u);
}

TEST(Regex, ForeignLetter) { EXPECT_THROW(regex_to_language("abc", Alphabet("ab")), alphabet_error); }

TEST(Regex, DefaultAlphabet) {
    EXPECT_EQ(regex_to_language("ba*").alphabet().letters(), "ab");
    EXPECT_EQ(regex_to_language("1").alphabet().letters(), "a");
}

TEST(Regex, ThompsonMatchesMembershipOracle) {
    // hand-written membership tests for a few expressions
    const Alphabet ab("ab");
    auto words = oracle::words_up_to("ab", 6);
    struct Case {
        const char* re;
        bool (*member)(const std::string&);
    };
    const Case cases[] = {
        {"a*b", [](const std::string& w) { return !w.empty() && w.back() == 'b' && w.find('b') == w.size() - 1; }},
        {"(a|b)*aa(a|b)*", [](const std::string& w) { return w.find("aa") != std::string::npos; }},
        {"(ab)*", [](const std::string& w) {
             if (w.size() % 2) return false;
             for (std::size_t i = 0; i < w.size(); i += 2)
                 if (w.compare(i, 2, "ab") != 0) return false;
             return true;
         }},
        {"(a|ba)*(1|b)", [](const std::string& w) { return w.find("bb") == std::string::npos; }},
    };
    for (const auto& c : cases) {
        Language l = regex_to_language(c.re, ab);
        Nfa n = regex_to_nfa(parse_regex(c.re), ab);
        for (const auto& w : words) {
            ASSERT_EQ(l.contains(w), c.member(w)) << c.re << " on " << w;
            ASSERT_EQ(n.accepts(w), c.member(w)) << c.re << " on " << w;
        }
    }
}

namespace {

const char* const a_star_b = R"(# a*b
alphabet: a b
states: 3
initial: 0
final: 1
0 a 0
0 b 1
1 a 2
1 b 2
2 a 2   # sink
2 b 2
)";

std::size_t error_line(std::string_view text) {
    try {
        parse_language(text);
    } catch (const format_error& e) {
        return e.line();
    }
    return 999;
}

} // namespace

TEST(TextFormat, ParsesDfa) {
    Language l = parse_language(a_star_b);
    EXPECT_EQ(l, regex_to_language("a*b", Alphabet("ab")));
    EXPECT_FALSE(looks_like_nfa(a_star_b));
}

TEST(TextFormat, ParsesNfaWithEpsilon) {
    const char* text = R"(alphabet: a b
states: 3
initials: 0 2
final: 1
0 a 0
0 ~ 1
2 b 1
)";
    EXPECT_TRUE(looks_like_nfa(text));
    Nfa n = parse_nfa(text);
    EXPECT_TRUE(n.has_epsilon_edges());
    EXPECT_EQ(parse_language(text), regex_to_language("a*|b", Alphabet("ab")));
}

TEST(TextFormat, RoundTrip) {
    Rng rng(17);
    for (int i = 0; i < 40; ++i) {
        Language l = random_language(rng, 5, Alphabet("abc"));
        EXPECT_EQ(parse_language(format_language(l)), l);
        Nfa n = random_nfa(rng, 4, Alphabet("ab"));
        EXPECT_EQ(Language(parse_nfa(format_nfa(n))), Language(n));
    }
}

TEST(TextFormat, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "qlang_roundtrip.dfa";
    Language l = witness::fig2(5);
    save_language(l, path.string());
    EXPECT_EQ(load_language(path.string()), l);
    std::filesystem::remove(path);
    EXPECT_THROW(load_language((std::filesystem::temp_directory_path() / "qlang_missing.dfa").string()), format_error);
}

TEST(TextFormat, ErrorsReportLines) {
    std::string text = a_star_b;
    EXPECT_EQ(error_line(std::string(text).replace(text.find("2 b 2"), 5, "2 b 7")), 11u);
    EXPECT_EQ(error_line(std::string(text).replace(text.find("1 a 2"), 5, "1 c 2")), 8u);
    EXPECT_EQ(error_line(std::string(text).replace(text.find("1 a 2"), 5, "1 b 0")), 9u); // duplicate of the next line
    EXPECT_EQ(error_line(std::string(text).replace(text.find("0 a 0"), 5, "0 a")), 6u);
    EXPECT_EQ(error_line(std::string(text).replace(text.find("states: 3"), 9, "states: x")), 3u);
    EXPECT_EQ(error_line(std::string(text).replace(text.find("final"), 5, "fnial")), 5u);
}

TEST(TextFormat, IncompleteDfaIsWholeFileError) {
    std::string text = a_star_b;
    text.erase(text.find("2 b 2"), 5);
    EXPECT_EQ(error_line(text), 0u);
    EXPECT_EQ(error_line("states: 1\ninitial: 0\n"), 0u); // no alphabet
}

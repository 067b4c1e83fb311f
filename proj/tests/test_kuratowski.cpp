#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qlang;

namespace {

const Alphabet ab("ab");

std::vector<Language> closed_members(std::size_t max_states) {
    return languages_up_to(max_states, ab, [](const Language& l) { return !closed_kinds(l).empty(); });
}

std::uint64_t pow2(std::size_t e) { return std::uint64_t{1} << e; }

} // namespace

TEST(Orbit, FullLanguage) {
    Orbit o = orbit(Language::universal(ab), Generator::plus);
    EXPECT_EQ(o.size(), 2u);
    EXPECT_TRUE(o.find("L-")->language.is_empty());
    EXPECT_EQ(orbit(Language::empty(ab), Generator::plus).size(), 2u);
    // the star of the empty set is {ε}, so the star orbit also holds {ε} and its complement
    Orbit s = orbit(Language::universal(ab), Generator::star);
    EXPECT_EQ(s.size(), 4u);
    EXPECT_EQ(s.find("L-*")->language, epsilon_language(ab));
}

TEST(Orbit, ClosedLanguagesWithPlus) {
    for (const auto& l : closed_members(3)) {
        Orbit o = orbit(l, Generator::plus);
        ASSERT_LE(o.size(), 4u);
        for (const auto& e : o.entries)
            ASSERT_TRUE(e.language == l || e.language == complement(l) || e.language == plus(l) ||
                        e.language == complement(plus(l)));
    }
}

TEST(Orbit, ClosedLanguageIdentities) {
    for (const auto& l : closed_members(3)) {
        const Language c = complement(l);
        for (auto kind : closed_kinds(l)) ASSERT_TRUE(is_ideal(kind, c));
        ASSERT_EQ(plus(c), c);
        ASSERT_EQ(closed_kinds(plus(l)).empty(), false);
        ASSERT_EQ(plus(complement(plus(l))), complement(plus(l)));
        if (l.is_empty() || l.is_universal()) continue;
        ASSERT_EQ(star(c), with_epsilon(c));
        ASSERT_EQ(complement(star(c)), without_epsilon(l));
        const Language sc = complement(star(l));
        ASSERT_EQ(star(sc), with_epsilon(sc));
        ASSERT_EQ(complement(star(sc)), without_epsilon(star(l)));
        ASSERT_LE(orbit(l, Generator::star).size(), 8u);
    }
}

TEST(Orbit, ComplexitySymmetryAndClosure) {
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        Language l = random_language(rng, 4, ab);
        for (auto g : {Generator::plus, Generator::star}) {
            Orbit o = orbit(l, g);
            ASSERT_TRUE(is_orbit_closed(o));
            for (const auto& e : o.entries) {
                const OrbitEntry* c = o.find(complement(e.language));
                ASSERT_NE(c, nullptr);
                ASSERT_EQ(c->complexity, e.complexity);
                ASSERT_EQ(evaluate_expression(l, e.expression), e.language) << e.expression;
            }
        }
    }
}

TEST(Orbit, LabelsAreShortestComplementFirst) {
    Orbit o = orbit(witness::kuratowski_suffix(5), Generator::star);
    std::vector<std::string> labels;
    for (const auto& e : o.entries) labels.push_back(e.expression);
    EXPECT_EQ(labels, (std::vector<std::string>{"L", "L-", "L*", "L-*", "L*-", "L-*-", "L*-*", "L*-*-"}));
}

TEST(OrbitComplexities, SuffixSpecExample) {
    auto v = orbit_complexities(witness::kuratowski_suffix(5), Generator::star);
    EXPECT_EQ(v["L"], 5u);
    EXPECT_EQ(v["L-"], 5u);
    EXPECT_EQ(v["L*"], 4u);
    EXPECT_EQ(v["L*-"], 4u);
    EXPECT_EQ(v["L-*"], 6u);
    EXPECT_EQ(v["L-*-"], 6u);
    EXPECT_EQ(v["L*-*"], 5u);
    EXPECT_EQ(v["L*-*-"], 5u);
}

TEST(OrbitComplexities, PrefixSpecExample) {
    Language l = witness::kuratowski_prefix(5);
    EXPECT_EQ(star(l).complexity(), 9u);
    EXPECT_EQ(without_epsilon(star(l)).complexity(), 10u);
}

TEST(OrbitComplexities, FamilyVectors) {
    for (std::size_t n = 4; n <= 7; ++n) {
        struct Case {
            Language l;
            std::size_t f;
        };
        const Case cases[] = {{witness::kuratowski_prefix(n), static_cast<std::size_t>(pow2(n - 2) + 1)},
                              {witness::kuratowski_suffix(n), n - 1},
                              {witness::kuratowski_subword(n), 2}};
        for (const auto& c : cases) {
            auto v = orbit_complexities(c.l, Generator::star);
            ASSERT_EQ(v.size(), 8u);
            EXPECT_EQ(v["L"], n);
            EXPECT_EQ(v["L-*"], n + 1);
            EXPECT_EQ(v["L-*-"], n + 1);
            EXPECT_EQ(v["L*"], c.f);
            EXPECT_EQ(v["L*-"], c.f);
            EXPECT_EQ(v["L*-*"], c.f + 1);
            EXPECT_EQ(v["L*-*-"], c.f + 1);
        }
    }
}

TEST(OrbitCaps, ClosedAndRandom) {
    auto closed = check_orbit_caps(closed_members(3));
    EXPECT_TRUE(closed.passed());
    EXPECT_EQ(closed.closed, closed.checked);
    EXPECT_LE(closed.max_plus, 4u);
    EXPECT_LE(closed.max_star, 8u);

    Rng rng(32);
    std::vector<Language> sample;
    for (int i = 0; i < 60; ++i) sample.push_back(random_language(rng, 4, ab));
    auto r = check_orbit_caps(sample);
    EXPECT_TRUE(r.passed());
    EXPECT_LE(r.max_plus, 10u);
    EXPECT_LE(r.max_star, 14u);
}

TEST(EvaluateExpression, Examples) {
    Language l = regex_to_language("a", ab);
    EXPECT_EQ(evaluate_expression(l, "L"), l);
    EXPECT_EQ(evaluate_expression(l, "-"), complement(l));
    EXPECT_EQ(evaluate_expression(l, "L+"), regex_to_language("aa*", ab));
    EXPECT_EQ(evaluate_expression(l, "L*-"), complement(star(l)));
    EXPECT_THROW(evaluate_expression(l, "L?"), parameter_error);
}

TEST(Generator, Names) {
    EXPECT_EQ(parse_generator("plus"), Generator::plus);
    EXPECT_EQ(parse_generator("star"), Generator::star);
    EXPECT_FALSE(parse_generator("kleene"));
    EXPECT_EQ(symbol(Generator::plus), '+');
}

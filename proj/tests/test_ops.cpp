#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qlang;

namespace {

const Alphabet ab("ab");

Language lang(std::string_view re, const Alphabet& a = ab) { return regex_to_language(re, a); }

std::vector<Language> random_sample(std::uint64_t seed, int count, std::size_t max_states = 4) {
    Rng rng(seed);
    std::vector<Language> out;
    for (int i = 0; i < count; ++i) out.push_back(random_language(rng, max_states, ab));
    return out;
}

// membership of the product by splitting
bool in_product(const Language& k, const Language& l, const std::string& w) {
    for (std::size_t i = 0; i <= w.size(); ++i)
        if (k.contains(w.substr(0, i)) && l.contains(w.substr(i))) return true;
    return false;
}

bool in_star(const Language& l, const std::string& w) {
    std::vector<bool> ok(w.size() + 1, false);
    ok[0] = true;
    for (std::size_t j = 1; j <= w.size(); ++j)
        for (std::size_t i = 0; i < j && !ok[j]; ++i) ok[j] = ok[i] && l.contains(w.substr(i, j - i));
    return ok[w.size()];
}

} // namespace

TEST(Complement, Examples) {
    EXPECT_EQ(complement(Language::empty(ab)), Language::universal(ab));
    for (const auto& l : random_sample(1, 50)) {
        EXPECT_EQ(complement(complement(l)), l);
        EXPECT_EQ(complement(l).complexity(), l.complexity());
    }
    const Alphabet a("a");
    Language fin = lang("1|a|aa", a);
    Language c = complement(fin);
    EXPECT_EQ(c, lang("aaaa*", a));
    EXPECT_TRUE(is_ideal(ClosureKind::prefix, c));
}

TEST(Boolean, Identities) {
    for (const auto& l : random_sample(2, 30)) {
        EXPECT_EQ(unite(l, Language::empty(ab)), l);
        EXPECT_EQ(intersect(l, Language::universal(ab)), l);
        EXPECT_TRUE(boolean(BooleanOp::symmetric_difference, l, l).is_empty());
    }
}

TEST(Boolean, AgreesWithMembershipAndStaysUnderMn) {
    auto sample = random_sample(3, 14);
    auto words = oracle::words_up_to("ab", 6);
    for (auto op : {BooleanOp::union_of, BooleanOp::intersection, BooleanOp::difference, BooleanOp::symmetric_difference})
        for (const auto& k : sample)
            for (const auto& l : sample) {
                Language r = boolean(op, k, l);
                ASSERT_LE(r.complexity(), k.complexity() * l.complexity());
                for (const auto& w : words) ASSERT_EQ(r.contains(w), apply(op, k.contains(w), l.contains(w)));
            }
}

TEST(Boolean, WidensMismatchedAlphabets) {
    Language k = lang("a*", Alphabet("a"));
    Language l = lang("b", Alphabet("b"));
    Language u = unite(k, l);
    EXPECT_EQ(u.alphabet().letters(), "ab");
    EXPECT_EQ(u, lang("a*|b"));
}

TEST(Boolean, PrefixIntersectionBoundOnSmallInstances) {
    auto members = languages_up_to(3, ab, [](const Language& l) { return is_closed(ClosureKind::prefix, l); });
    for (const auto& k : members)
        for (const auto& l : members) {
            const std::size_t m = k.complexity(), n = l.complexity();
            if (m < 2 || n < 2) continue;
            ASSERT_LE(intersect(k, l).complexity(), m * n - (m + n - 2));
        }
}

TEST(Product, WitnessPairs) {
    auto [k1, l1] = witness::product_prefix_pair(4, 4);
    EXPECT_EQ(product(k1, l1).complexity(), 20u);
    auto [k2, l2] = witness::product_suffix_pair(3, 4);
    EXPECT_EQ(product(k2, l2).complexity(), 9u);
    auto [k3, l3] = witness::product_subword_pair(3, 3);
    EXPECT_EQ(product(k3, l3).complexity(), 5u);
}

TEST(Product, AgreesWithSplitting) {
    auto sample = random_sample(4, 10, 3);
    auto words = oracle::words_up_to("ab", 5);
    for (const auto& k : sample)
        for (const auto& l : sample) {
            Language p = product(k, l);
            for (const auto& w : words) ASSERT_EQ(p.contains(w), in_product(k, l, w)) << w;
        }
}

TEST(Product, DegenerateOperands) {
    const Language empty = Language::empty(ab), full = Language::universal(ab);
    for (const auto& l : random_sample(5, 20)) {
        EXPECT_TRUE(product(empty, l).is_empty());
        EXPECT_TRUE(product(l, empty).is_empty());
        if (!l.is_empty()) EXPECT_TRUE(is_ideal(ClosureKind::suffix, product(full, l)));
    }
    // for closed operands of complexity 1 the product has complexity 1
    EXPECT_EQ(product(full, full).complexity(), 1u);
    EXPECT_EQ(product(witness::closure_prefix(4), full).complexity(), 1u);
}

TEST(Star, Examples) {
    EXPECT_EQ(star(witness::star_prefix(5)).complexity(), 9u);
    EXPECT_EQ(star(lang("1|b|ab|aab")).complexity(), 4u);
    EXPECT_EQ(star(Language::empty(ab)), Language::word(ab, ""));
    EXPECT_EQ(star(Language::empty(ab)).complexity(), 2u);
}

TEST(Star, AgreesWithSplitting) {
    auto words = oracle::words_up_to("ab", 6);
    for (const auto& l : random_sample(6, 40)) {
        Language s = star(l);
        for (const auto& w : words) ASSERT_EQ(s.contains(w), in_star(l, w)) << w;
    }
}

TEST(Plus, Examples) {
    EXPECT_TRUE(plus(Language::empty(ab)).is_empty());
    Language s = witness::star_prefix(5);
    EXPECT_EQ(plus(s), star(s));
    const Alphabet a("a");
    Language p = plus(lang("a", a));
    EXPECT_EQ(p, lang("aa*", a));
    EXPECT_EQ(p.complexity(), 2u);
}

TEST(Reverse, Examples) {
    for (const auto& l : random_sample(7, 50)) EXPECT_EQ(reverse(reverse(l)), l);
    EXPECT_EQ(reverse(lang("a*b")), lang("ba*"));
    auto words = oracle::words_up_to("ab", 6);
    for (const auto& l : random_sample(8, 20)) {
        Language r = reverse(l);
        for (const auto& w : words) ASSERT_EQ(r.contains(w), l.contains(std::string(w.rbegin(), w.rend())));
    }
}

TEST(Reverse, PrefixClosedBoundAtSmallN) {
    for (const auto& l : languages_up_to(4, ab, [](const Language& x) { return is_closed(ClosureKind::prefix, x); })) {
        const std::size_t n = l.complexity();
        if (n >= 2) ASSERT_LE(reverse(l).complexity(), std::size_t{1} << (n - 1));
    }
}

TEST(Residual, Examples) {
    for (const auto& l : random_sample(9, 20)) EXPECT_EQ(residual(l, ""), l);
    EXPECT_EQ(residual(lang("a*b"), "a"), lang("a*b"));
    EXPECT_THROW(residual(lang("a*b"), "c"), alphabet_error);
    auto words = oracle::words_up_to("ab", 3);
    for (const auto& l : random_sample(10, 20))
        for (const auto& w : words) {
            Language r = residual(l, w);
            for (const auto& x : oracle::words_up_to("ab", 3)) ASSERT_EQ(r.contains(x), l.contains(w + x));
        }
}

TEST(Residual, SuffixClosedQuotientsShrinkAlongSuffixes) {
    auto members = languages_up_to(3, ab, [](const Language& l) { return is_closed(ClosureKind::suffix, l); });
    auto words = oracle::words_up_to("ab", 3);
    for (const auto& l : members)
        for (const auto& w : words)
            for (std::size_t i = 0; i <= w.size(); ++i) ASSERT_TRUE(is_subset(residual(l, w), residual(l, w.substr(i))));
}

TEST(EpsilonFunction, Examples) {
    EXPECT_FALSE(epsilon_function(Language::empty(ab)).contains_epsilon);
    EXPECT_FALSE(epsilon_function(lang("a", Alphabet("a"))).contains_epsilon);
    for (auto f : {witness::closure_prefix(4), witness::star_suffix_eq(4), witness::star_subword(3)})
        EXPECT_TRUE(epsilon_function(f).contains_epsilon);
}

TEST(AcceptingQuotients, Examples) {
    EXPECT_EQ(accepting_quotient_count(witness::product_suffix_pair(4, 3).first), 1u);
    EXPECT_EQ(accepting_quotient_count(Language::empty(ab)), 0u);
    for (const auto& l : languages_up_to(4, ab, [](const Language& x) { return is_closed(ClosureKind::prefix, x); }))
        if (!l.is_universal()) ASSERT_EQ(accepting_quotient_count(l), l.complexity() - 1);
}

TEST(Remarks, PrefixClosedHaveEmptyQuotientOrAreFull) {
    for (const auto& l : languages_up_to(4, ab, [](const Language& x) { return is_closed(ClosureKind::prefix, x); })) {
        ASSERT_TRUE(l.is_universal() || l.has_empty_quotient());
        for (const auto& w : oracle::words_up_to("ab", 4)) {
            Language r = residual(l, w);
            ASSERT_TRUE(r.contains("") || r.is_empty());
        }
    }
}

TEST(EpsilonHelpers, AddAndRemove) {
    Language l = lang("a*");
    EXPECT_FALSE(without_epsilon(l).contains(""));
    EXPECT_EQ(with_epsilon(without_epsilon(l)), l);
    EXPECT_EQ(epsilon_language(ab), Language::word(ab, ""));
}

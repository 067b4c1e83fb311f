#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qlang;

TEST(Oracle, MinimizeMatchesDoubleReversalOnRandomNfas) {
    Rng rng(41);
    const Alphabet ab("ab");
    std::uniform_int_distribution<std::size_t> size(1, 5);
    for (int i = 0; i < 1000; ++i) {
        Nfa n = random_nfa(rng, size(rng), ab);
        Dfa m = minimize(determinize(n));
        ASSERT_TRUE(oracle::isomorphic(oracle::from_dfa(m), oracle::double_reversal(n))) << format_nfa(n);
        ASSERT_EQ(Language(n).dfa().size(), m.size());
    }
}

TEST(Oracle, ClosuresMatchBruteForceDownwardClosure) {
    Rng rng(42);
    const Alphabet ab("ab");
    const auto words = oracle::words_up_to("ab", 6);
    for (int i = 0; i < 60; ++i) {
        Language l = random_language(rng, 4, ab);
        for (auto kind : all_closure_kinds) {
            Language c = closure(kind, l);
            const auto below = oracle::bounded_closure(kind, l, 6);
            for (const auto& w : words) {
                ASSERT_EQ(c.contains(w), oracle::in_closure(kind, l, w)) << to_string(kind) << " " << w;
                if (below.count(w)) ASSERT_TRUE(c.contains(w));
            }
        }
    }
}

TEST(QuotientIdentities, BooleanProductStar) {
    Rng rng(43);
    const Alphabet ab("ab");
    const auto words = oracle::words_up_to("ab", 3);
    for (int i = 0; i < 100; ++i) {
        Language k = random_language(rng, 4, ab);
        Language l = random_language(rng, 4, ab);
        for (const auto& w : words) {
            for (auto op : {BooleanOp::union_of, BooleanOp::intersection, BooleanOp::difference,
                            BooleanOp::symmetric_difference})
                ASSERT_EQ(residual(boolean(op, k, l), w), boolean(op, residual(k, w), residual(l, w)));
            ASSERT_EQ(residual(product(k, l), w), oracle::product_quotient(k, l, w)) << w;
            ASSERT_EQ(residual(star(l), w), oracle::star_quotient(l, w)) << w;
        }
    }
}

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "automaton.hpp"
#include "determinize.hpp"
#include "language.hpp"

namespace qlang {

enum class BooleanOp { union_of, intersection, difference, symmetric_difference };

inline std::string_view to_string(BooleanOp op) {
    switch (op) {
    case BooleanOp::union_of: return "union";
    case BooleanOp::intersection: return "intersection";
    case BooleanOp::difference: return "difference";
    case BooleanOp::symmetric_difference: return "symmetric-difference";
    }
    return "?";
}

inline bool apply(BooleanOp op, bool x, bool y) noexcept {
    switch (op) {
    case BooleanOp::union_of: return x || y;
    case BooleanOp::intersection: return x && y;
    case BooleanOp::difference: return x && !y;
    case BooleanOp::symmetric_difference: return x != y;
    }
    return false;
}

/// Value of the epsilon-function: either the empty set or {ε}.
struct EpsilonValue {
    bool contains_epsilon = false;

    std::string_view to_string() const noexcept { return contains_epsilon ? "{ε}" : "∅"; }
    friend bool operator==(EpsilonValue, EpsilonValue) = default;
};

/// Both operands viewed over the union of their alphabets.
inline std::pair<Language, Language> over_common_alphabet(const Language& k, const Language& l) {
    if (k.alphabet() == l.alphabet()) return {k, l};
    Alphabet common = unite(k.alphabet(), l.alphabet());
    return {widen_alphabet(k, common), widen_alphabet(l, common)};
}

inline Language complement(const Language& l) {
    Dfa d = l.dfa();
    for (State q = 0; q < d.size(); ++q) d.set_final(q, !d.is_final(q));
    return Language(d);
}

/// Product (pair) construction on the accessible part of K x L.
inline Language boolean(BooleanOp op, const Language& k_in, const Language& l_in) {
    auto [k, l] = over_common_alphabet(k_in, l_in);
    const Dfa& x = k.dfa();
    const Dfa& y = l.dfa();
    const std::size_t letters = x.letter_count();
    const std::size_t width = y.size();
    std::vector<State> id(x.size() * y.size(), detail::no_state);
    std::vector<std::pair<State, State>> order{{x.initial(), y.initial()}};
    id[x.initial() * width + y.initial()] = 0;
    std::vector<State> delta;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < letters; ++a) {
            State p = x.next(order[i].first, a);
            State q = y.next(order[i].second, a);
            State& slot = id[p * width + q];
            if (slot == detail::no_state) {
                slot = static_cast<State>(order.size());
                order.emplace_back(p, q);
            }
            delta.push_back(slot);
        }
    }
    Dfa d(x.alphabet(), order.size());
    for (State s = 0; s < order.size(); ++s) {
        for (std::size_t a = 0; a < letters; ++a) d.set(s, a, delta[s * letters + a]);
        d.set_final(s, apply(op, x.is_final(order[s].first), y.is_final(order[s].second)));
    }
    return Language(d);
}

inline Language unite(const Language& k, const Language& l) { return boolean(BooleanOp::union_of, k, l); }
inline Language intersect(const Language& k, const Language& l) { return boolean(BooleanOp::intersection, k, l); }
inline Language subtract(const Language& k, const Language& l) { return boolean(BooleanOp::difference, k, l); }

inline bool is_subset(const Language& k, const Language& l) { return subtract(k, l).is_empty(); }

/// KL via an epsilon-nfa: the two machines side by side, with epsilon edges
/// from every final state of K to the initial state of L.
inline Language product(const Language& k_in, const Language& l_in) {
    auto [k, l] = over_common_alphabet(k_in, l_in);
    const Dfa& x = k.dfa();
    const Dfa& y = l.dfa();
    const auto offset = static_cast<State>(x.size());
    Nfa nfa(x.alphabet(), x.size() + y.size(), true);
    for (State q = 0; q < x.size(); ++q) {
        for (std::size_t a = 0; a < x.letter_count(); ++a) nfa.add_edge(q, a, x.next(q, a));
        if (x.is_final(q)) nfa.add_epsilon(q, offset + y.initial());
    }
    for (State q = 0; q < y.size(); ++q) {
        for (std::size_t a = 0; a < y.letter_count(); ++a) nfa.add_edge(offset + q, a, offset + y.next(q, a));
        nfa.set_final(offset + q, y.is_final(q));
    }
    nfa.set_initial(x.initial());
    return Language(nfa);
}

/// L* via an epsilon-nfa: a fresh accepting initial state with an epsilon
/// edge to the old initial state, and epsilon edges from finals back to it.
inline Language star(const Language& l) {
    const Dfa& x = l.dfa();
    const auto fresh = static_cast<State>(x.size());
    Nfa nfa(x.alphabet(), x.size() + 1, true);
    for (State q = 0; q < x.size(); ++q) {
        for (std::size_t a = 0; a < x.letter_count(); ++a) nfa.add_edge(q, a, x.next(q, a));
        if (x.is_final(q)) {
            nfa.set_final(q);
            nfa.add_epsilon(q, x.initial());
        }
    }
    nfa.add_epsilon(fresh, x.initial());
    nfa.set_initial(fresh);
    nfa.set_final(fresh);
    return Language(nfa);
}

inline Language plus(const Language& l) { return product(l, star(l)); }

inline Language reverse(const Language& l) { return Language(reversed_nfa(l.dfa())); }

/// The quotient L_w = { x | wx in L }: the quotient automaton re-rooted at
/// the state reached by w.
inline Language residual(const Language& l, std::string_view w) {
    Dfa d = l.dfa();
    d.set_initial(d.run(w));
    return Language(d);
}

inline EpsilonValue epsilon_function(const Language& l) { return {l.dfa().is_final(l.dfa().initial())}; }

/// Number of accepting quotients (final states of the quotient automaton).
inline std::size_t accepting_quotient_count(const Language& l) { return l.dfa().final_count(); }

inline Language epsilon_language(const Alphabet& alphabet) { return Language::word(alphabet, ""); }

/// L \ {ε}
inline Language without_epsilon(const Language& l) { return subtract(l, epsilon_language(l.alphabet())); }

/// L ∪ {ε}
inline Language with_epsilon(const Language& l) { return unite(l, epsilon_language(l.alphabet())); }

} // namespace qlang

#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "automaton.hpp"

namespace qlang {

namespace detail {

/// Fixed-width bitset over nfa states, used as the key of a subset state.
struct StateSet {
    std::vector<std::uint64_t> words;

    explicit StateSet(std::size_t n = 0) : words((n + 63) / 64, 0) {}

    void insert(State q) { words[q >> 6] |= std::uint64_t{1} << (q & 63); }
    bool contains(State q) const { return (words[q >> 6] >> (q & 63)) & 1U; }
    bool empty() const {
        for (auto w : words)
            if (w) return false;
        return true;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::uint64_t w = words[i];
            while (w) {
                auto bit = static_cast<State>(__builtin_ctzll(w));
                f(static_cast<State>(i * 64 + bit));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const StateSet&, const StateSet&) = default;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : s.words) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

inline void epsilon_close(const Nfa& nfa, StateSet& set) {
    if (!nfa.has_epsilon_edges()) return;
    std::vector<State> stack;
    set.for_each([&](State q) { stack.push_back(q); });
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State t : nfa.epsilon_targets(q)) {
            if (!set.contains(t)) {
                set.insert(t);
                stack.push_back(t);
            }
        }
    }
}

} // namespace detail

/// Accessible subset construction. The epsilon closure is applied to the
/// initial set and after every letter step; the empty subset, when reached,
/// becomes the rejecting sink so the result is complete.
inline Dfa determinize(const Nfa& nfa) {
    using detail::StateSet;
    const std::size_t n = nfa.size();
    const std::size_t k = nfa.letter_count();

    std::vector<StateSet> subsets;
    std::unordered_map<StateSet, State, detail::StateSetHash> ids;
    std::vector<State> delta;

    StateSet start(n);
    for (State q = 0; q < n; ++q)
        if (nfa.is_initial(q)) start.insert(q);
    detail::epsilon_close(nfa, start);
    ids.emplace(start, 0);
    subsets.push_back(std::move(start));

    for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
        for (std::size_t a = 0; a < k; ++a) {
            StateSet next(n);
            subsets[cur].for_each([&](State q) {
                for (State t : nfa.targets(q, a)) next.insert(t);
            });
            detail::epsilon_close(nfa, next);
            auto [it, inserted] = ids.try_emplace(next, static_cast<State>(subsets.size()));
            if (inserted) subsets.push_back(std::move(next));
            delta.push_back(it->second);
        }
    }

    Dfa dfa(nfa.alphabet(), subsets.size());
    for (State s = 0; s < subsets.size(); ++s) {
        for (std::size_t a = 0; a < k; ++a) dfa.set(s, a, delta[s * k + a]);
        bool accepting = false;
        subsets[s].for_each([&](State q) { accepting = accepting || nfa.is_final(q); });
        dfa.set_final(s, accepting);
    }
    return dfa;
}

/// Nfa accepting the reversal of the dfa's language: edges flipped, finals
/// become the initial set, the old initial state is the only final state.
inline Nfa reversed_nfa(const Dfa& dfa) {
    Nfa nfa(dfa.alphabet(), dfa.size());
    for (State q = 0; q < dfa.size(); ++q) {
        for (std::size_t a = 0; a < dfa.letter_count(); ++a) nfa.add_edge(dfa.next(q, a), a, q);
        nfa.set_initial(q, dfa.is_final(q));
    }
    nfa.set_final(dfa.initial());
    return nfa;
}

} // namespace qlang

#pragma once

#include <cstdint>
#include <random>

#include "automaton.hpp"
#include "language.hpp"

namespace qlang {

using Rng = std::mt19937_64;

/// Uniform complete dfa with n states: each transition target and final flag
/// drawn independently. With `sink_bias` > 0, state n-1 is made a rejecting
/// sink and each other transition goes there with that probability.
inline Dfa random_dfa(Rng& rng, std::size_t n, const Alphabet& alphabet, double sink_bias = 0.0) {
    std::uniform_int_distribution<State> target(0, static_cast<State>(n - 1));
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution to_sink(sink_bias);
    Dfa d(alphabet, n);
    const bool use_sink = sink_bias > 0.0 && n > 1;
    const auto sink = static_cast<State>(n - 1);
    for (State q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            if (use_sink && (q == sink || to_sink(rng)))
                d.set(q, a, sink);
            else
                d.set(q, a, target(rng));
        }
        d.set_final(q, (!use_sink || q != sink) && coin(rng));
    }
    return d;
}

/// Random nfa with n states: each (state, letter, target) edge present with
/// probability `density`; initial and final sets drawn per state.
inline Nfa random_nfa(Rng& rng, std::size_t n, const Alphabet& alphabet, double density = 0.3) {
    std::bernoulli_distribution edge(density);
    std::bernoulli_distribution coin(0.4);
    Nfa nfa(alphabet, n);
    for (State q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < alphabet.size(); ++a)
            for (State t = 0; t < n; ++t)
                if (edge(rng)) nfa.add_edge(q, a, t);
        nfa.set_initial(q, coin(rng));
        nfa.set_final(q, coin(rng));
    }
    if (n > 0) nfa.set_initial(0);
    return nfa;
}

/// Language of a random dfa with 1..max_states states.
inline Language random_language(Rng& rng, std::size_t max_states, const Alphabet& alphabet) {
    std::uniform_int_distribution<std::size_t> size(1, max_states);
    return Language(random_dfa(rng, size(rng), alphabet));
}

} // namespace qlang

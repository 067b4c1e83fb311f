#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "automaton.hpp"
#include "determinize.hpp"
#include "minimize.hpp"

namespace qlang {

/// A regular language, stored as its quotient automaton: the minimal complete
/// dfa in canonical breadth-first numbering. Two languages over the same
/// alphabet are equal iff their machines are identical.
class Language {
public:
    Language() : Language(Alphabet("a"), false) {}

    explicit Language(const Dfa& dfa) : dfa_(minimize(dfa)) {}
    explicit Language(const Nfa& nfa) : dfa_(minimize(determinize(nfa))) {}

    static Language empty(const Alphabet& alphabet) { return Language(alphabet, false); }
    static Language universal(const Alphabet& alphabet) { return Language(alphabet, true); }

    /// The singleton {w}.
    static Language word(const Alphabet& alphabet, std::string_view w) {
        Dfa d(alphabet, w.size() + 2);
        const State sink = static_cast<State>(w.size() + 1);
        for (State q = 0; q <= sink; ++q)
            for (std::size_t a = 0; a < alphabet.size(); ++a) d.set(q, a, sink);
        for (std::size_t i = 0; i < w.size(); ++i)
            d.set(static_cast<State>(i), alphabet.index_of(w[i]), static_cast<State>(i + 1));
        d.set_final(static_cast<State>(w.size()));
        return Language(d);
    }

    const Dfa& dfa() const noexcept { return dfa_; }
    const Alphabet& alphabet() const noexcept { return dfa_.alphabet(); }

    /// Quotient complexity: the number of distinct quotients, counting the
    /// empty quotient when it occurs.
    std::size_t complexity() const noexcept { return dfa_.size(); }

    bool contains(std::string_view w) const { return dfa_.accepts(w); }

    /// Index of the empty quotient, if the language has it.
    std::optional<State> empty_quotient() const {
        for (State q = 0; q < dfa_.size(); ++q) {
            if (dfa_.is_final(q)) continue;
            bool loops = true;
            for (std::size_t a = 0; a < dfa_.letter_count() && loops; ++a) loops = dfa_.next(q, a) == q;
            if (loops) return q;
        }
        return std::nullopt;
    }
    bool has_empty_quotient() const { return empty_quotient().has_value(); }

    bool is_empty() const noexcept { return dfa_.size() == 1 && !dfa_.is_final(0); }
    bool is_universal() const noexcept { return dfa_.size() == 1 && dfa_.is_final(0); }

    friend bool operator==(const Language&, const Language&) = default;
    friend auto operator<=>(const Language& x, const Language& y) { return x.dfa_ <=> y.dfa_; }

private:
    Language(const Alphabet& alphabet, bool accept_all) : dfa_(alphabet, 1) { dfa_.set_final(0, accept_all); }

    Dfa dfa_;
};

inline std::size_t complexity(const Language& l) noexcept { return l.complexity(); }

inline bool membership(const Language& l, std::string_view w) { return l.contains(w); }

inline bool is_equivalent(const Language& k, const Language& l) {
    if (k.alphabet() != l.alphabet())
        throw alphabet_error("is_equivalent: alphabets {" + k.alphabet().letters() + "} and {" +
                             l.alphabet().letters() + "} differ; widen first");
    return k == l;
}

/// The same set of words viewed over a larger alphabet. New letters lead to
/// the rejecting sink, which is added if the language had none.
inline Language widen_alphabet(const Language& l, const Alphabet& alphabet) {
    if (!alphabet.includes(l.alphabet()))
        throw alphabet_error("widen_alphabet: {" + alphabet.letters() + "} does not include {" +
                             l.alphabet().letters() + "}");
    if (alphabet == l.alphabet()) return l;
    const Dfa& src = l.dfa();
    const State sink = static_cast<State>(src.size());
    Dfa d(alphabet, src.size() + 1, src.initial());
    for (State q = 0; q < src.size(); ++q) {
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            char c = alphabet[a];
            d.set(q, a, src.alphabet().contains(c) ? src.next(q, c) : sink);
        }
        d.set_final(q, src.is_final(q));
    }
    for (std::size_t a = 0; a < alphabet.size(); ++a) d.set(sink, a, sink);
    return Language(d);
}

} // namespace qlang

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "automaton.hpp"
#include "closure.hpp"
#include "language.hpp"
#include "regex.hpp"

namespace qlang {

enum class WitnessFamily {
    closure_prefix,
    fig1,
    fig2,
    closure_subword,
    product_prefix_pair,
    product_suffix_pair,
    product_subword_pair,
    star_prefix,
    star_suffix_eq,
    star_suffix_neq,
    star_subword,
    kuratowski_prefix,
    kuratowski_suffix,
    kuratowski_subword,
    unary_closed,
};

inline constexpr std::array<std::pair<WitnessFamily, std::string_view>, 15> witness_family_names{{
    {WitnessFamily::closure_prefix, "closure-prefix"},
    {WitnessFamily::fig1, "fig1"},
    {WitnessFamily::fig2, "fig2"},
    {WitnessFamily::closure_subword, "closure-subword"},
    {WitnessFamily::product_prefix_pair, "product-prefix-pair"},
    {WitnessFamily::product_suffix_pair, "product-suffix-pair"},
    {WitnessFamily::product_subword_pair, "product-subword-pair"},
    {WitnessFamily::star_prefix, "star-prefix"},
    {WitnessFamily::star_suffix_eq, "star-suffix-eq"},
    {WitnessFamily::star_suffix_neq, "star-suffix-neq"},
    {WitnessFamily::star_subword, "star-subword"},
    {WitnessFamily::kuratowski_prefix, "kuratowski-prefix"},
    {WitnessFamily::kuratowski_suffix, "kuratowski-suffix"},
    {WitnessFamily::kuratowski_subword, "kuratowski-subword"},
    {WitnessFamily::unary_closed, "unary-closed"},
}};

inline std::string_view to_string(WitnessFamily f) {
    for (auto [family, name] : witness_family_names)
        if (family == f) return name;
    return "?";
}

inline std::optional<WitnessFamily> parse_witness_family(std::string_view s) {
    for (auto [family, name] : witness_family_names)
        if (name == s) return family;
    return std::nullopt;
}

inline bool is_pair_family(WitnessFamily f) {
    return f == WitnessFamily::product_prefix_pair || f == WitnessFamily::product_suffix_pair ||
           f == WitnessFamily::product_subword_pair;
}

/// A single witness language, or a (K, L) pair for the product families.
struct Witness {
    Language first;
    std::optional<Language> second;
};

namespace detail {

inline void require(bool ok, std::string_view family, const std::string& what) {
    if (!ok) throw parameter_error(std::string(family) + ": " + what);
}

inline Language checked(Language l, std::string_view family, std::size_t kappa, std::optional<ClosureKind> kind) {
    if (l.complexity() != kappa)
        throw structure_error(std::string(family) + ": self-check failed, complexity " +
                              std::to_string(l.complexity()) + " != " + std::to_string(kappa));
    if (kind && !is_closed(*kind, l))
        throw structure_error(std::string(family) + ": self-check failed, not " + std::string(to_string(*kind)) +
                              "-closed");
    return l;
}

/// Dfa with every transition pointing at `sink`.
inline Dfa all_to(const Alphabet& alphabet, std::size_t states, State sink) {
    Dfa d(alphabet, states);
    for (State q = 0; q < states; ++q)
        for (std::size_t a = 0; a < alphabet.size(); ++a) d.set(q, a, sink);
    return d;
}

inline std::string repeat(char c, std::size_t times) { return std::string(times, c); }

/// Words over {a,b,...} with fewer than `limit` occurrences of `letter`.
inline Language fewer_than(const Alphabet& alphabet, char letter, std::size_t limit) {
    const auto sink = static_cast<State>(limit);
    Dfa d(alphabet, limit + 1);
    for (State q = 0; q <= sink; ++q) {
        for (std::size_t a = 0; a < alphabet.size(); ++a)
            d.set(q, a, (q == sink) ? sink : (alphabet[a] == letter ? q + 1 : q));
        d.set_final(q, q != sink);
    }
    return Language(d);
}

} // namespace detail

namespace witness {

/// {a^i | i <= n-2} over {a,b}.
inline Language closure_prefix(std::size_t n) {
    detail::require(n >= 2, "closure-prefix", "n must be >= 2");
    const auto sink = static_cast<State>(n - 1);
    Dfa d = detail::all_to(Alphabet("ab"), n, sink);
    for (State i = 0; i + 1 < n; ++i) {
        d.set_final(i);
        d.set(i, 'a', i + 1);
    }
    return detail::checked(Language(d), "closure-prefix", n, ClosureKind::prefix);
}

/// Quotient automaton without an empty quotient. States 0..n-1, initial and
/// only final state 0; a: i -> i+1 mod n; b: 1 -> 0, other states fixed.
inline Language fig1(std::size_t n) {
    detail::require(n >= 2, "fig1", "n must be >= 2");
    Dfa d(Alphabet("ab"), n);
    for (State i = 0; i < n; ++i) {
        d.set(i, 'a', static_cast<State>((i + 1) % n));
        d.set(i, 'b', i == 1 ? 0 : i);
    }
    d.set_final(0);
    Language l(d);
    detail::checked(l, "fig1", n, std::nullopt);
    if (l.has_empty_quotient()) throw structure_error("fig1: self-check failed, has an empty quotient");
    return l;
}

/// Quotient automaton with an empty quotient n-1. On 0..n-2: a cycles
/// i -> i+1 mod (n-1); b: 0 -> sink, 1 -> 0, other states fixed.
inline Language fig2(std::size_t n) {
    detail::require(n >= 2, "fig2", "n must be >= 2");
    const auto sink = static_cast<State>(n - 1);
    Dfa d = detail::all_to(Alphabet("ab"), n, sink);
    const auto cycle = static_cast<State>(n - 1);
    for (State i = 0; i < cycle; ++i) {
        d.set(i, 'a', (i + 1) % cycle);
        d.set(i, 'b', i == 0 ? sink : (i == 1 ? 0 : i));
    }
    d.set_final(0);
    Language l(d);
    detail::checked(l, "fig2", n, std::nullopt);
    if (!l.has_empty_quotient()) throw structure_error("fig2: self-check failed, no empty quotient");
    return l;
}

/// n >= 3: over a_1..a_{n-2}, the words whose first letter occurs exactly
/// once. n == 2: a* over {a,b}.
inline Language closure_subword(std::size_t n) {
    detail::require(n >= 2 && n <= 28, "closure-subword", "n must be in 2..28");
    if (n == 2) return detail::checked(regex_to_language("a*", Alphabet("ab")), "closure-subword", 2, std::nullopt);
    Alphabet sigma = Alphabet::first(n - 2);
    std::string expr;
    for (char first : sigma) {
        if (!expr.empty()) expr += '|';
        std::string rest;
        for (char c : sigma)
            if (c != first) rest += rest.empty() ? std::string(1, c) : std::string("|") + c;
        expr += first;
        if (!rest.empty()) expr += "(" + rest + ")*";
    }
    return detail::checked(regex_to_language(expr, sigma), "closure-subword", n, std::nullopt);
}

/// Prefix-closed pair over {a,b,c}.
///   K: q_0..q_{m-1}, q_{m-1} empty; a,b loop on live states; c: q_i -> q_{i+1}.
///   L: 0..n-1, n-1 empty; a: i -> i+1 mod (n-1); b: 0 -> 0, i -> i+1
///      (n-2 -> empty); c fixes live states. n == 2: L = {a,c}*.
inline std::pair<Language, Language> product_prefix_pair(std::size_t m, std::size_t n) {
    detail::require(m >= 2 && n >= 2, "product-prefix-pair", "m and n must be >= 2");
    const Alphabet abc("abc");
    const auto ksink = static_cast<State>(m - 1);
    Dfa k = detail::all_to(abc, m, ksink);
    for (State i = 0; i < ksink; ++i) {
        k.set(i, 'a', i);
        k.set(i, 'b', i);
        k.set(i, 'c', i + 1);
        k.set_final(i);
    }
    const auto lsink = static_cast<State>(n - 1);
    Dfa l = detail::all_to(abc, n, lsink);
    if (n == 2) {
        l.set(0, 'a', 0);
        l.set(0, 'c', 0);
        l.set_final(0);
    } else {
        const auto cycle = static_cast<State>(n - 1);
        for (State i = 0; i < cycle; ++i) {
            l.set(i, 'a', (i + 1) % cycle);
            l.set(i, 'b', i == 0 ? 0 : i + 1);
            l.set(i, 'c', i);
            l.set_final(i);
        }
    }
    return {detail::checked(Language(k), "product-prefix-pair", m, ClosureKind::prefix),
            detail::checked(Language(l), "product-prefix-pair", n, ClosureKind::prefix)};
}

/// Suffix-closed pair over {a,b,c}, each with a single accepting quotient.
///   K: state i counts the a's since the last c (b is neutral); m-1 copies
///      kill the word; accepting iff no a since the last c.
///   L: the same with b counted up to n-1 and a neutral.
inline std::pair<Language, Language> product_suffix_pair(std::size_t m, std::size_t n) {
    detail::require(m >= 2 && n >= 2, "product-suffix-pair", "m and n must be >= 2");
    const Alphabet abc("abc");
    auto build = [&](std::size_t size, char counted, char neutral) {
        const auto sink = static_cast<State>(size - 1);
        Dfa d = detail::all_to(abc, size, sink);
        for (State j = 0; j < sink; ++j) {
            d.set(j, counted, j + 1);
            d.set(j, neutral, j);
            d.set(j, 'c', 0);
        }
        d.set_final(0);
        return Language(d);
    };
    return {detail::checked(build(m, 'a', 'b'), "product-suffix-pair", m, ClosureKind::suffix),
            detail::checked(build(n, 'b', 'a'), "product-suffix-pair", n, ClosureKind::suffix)};
}

/// K: a^{m-1} is not a subword; L: b^{n-1} is not a subword; over {a,b}.
inline std::pair<Language, Language> product_subword_pair(std::size_t m, std::size_t n) {
    detail::require(m >= 2 && n >= 2, "product-subword-pair", "m and n must be >= 2");
    const Alphabet ab("ab");
    return {detail::checked(detail::fewer_than(ab, 'a', m - 1), "product-subword-pair", m, ClosureKind::subword),
            detail::checked(detail::fewer_than(ab, 'b', n - 1), "product-subword-pair", n, ClosureKind::subword)};
}

namespace detail_star {
inline Dfa star_prefix_dfa(std::size_t n) {
    const auto sink = static_cast<State>(n - 1);
    Dfa d = qlang::detail::all_to(Alphabet("abc"), n, sink);
    for (State i = 0; i + 3 <= n; ++i) d.set(i, 'a', i + 1);
    for (State i = 1; i + 3 <= n; ++i) d.set(i, 'b', i + 1);
    d.set(static_cast<State>(n - 2), 'c', 1);
    for (State i = 0; i < sink; ++i) d.set_final(i);
    return d;
}
} // namespace detail_star

/// Prefix-closed over {a,b,c}; n-1 is the empty quotient and transitions not
/// listed go there. a: i -> i+1 for 0 <= i <= n-3; b: i -> i+1 for
/// 1 <= i <= n-3; c: n-2 -> 1.
inline Language star_prefix(std::size_t n) {
    detail::require(n >= 3, "star-prefix", "n must be >= 3");
    return detail::checked(Language(detail_star::star_prefix_dfa(n)), "star-prefix", n, ClosureKind::prefix);
}

/// (a ∪ b a^{n-2})*, suffix-closed and equal to its own star.
inline Language star_suffix_eq(std::size_t n) {
    detail::require(n >= 3, "star-suffix-eq", "n must be >= 3");
    return detail::checked(regex_to_language("(a|b" + detail::repeat('a', n - 2) + ")*", Alphabet("ab")),
                           "star-suffix-eq", n, ClosureKind::suffix);
}

/// ε ∪ a^0 b ∪ ... ∪ a^{n-3} b.
inline Language star_suffix_neq(std::size_t n) {
    detail::require(n >= 3, "star-suffix-neq", "n must be >= 3");
    std::string expr = "1";
    for (std::size_t i = 0; i + 3 <= n; ++i) expr += "|" + detail::repeat('a', i) + "b";
    return detail::checked(regex_to_language(expr, Alphabet("ab")), "star-suffix-neq", n, ClosureKind::suffix);
}

/// {a^i | 0 <= i <= n-2} over {a,b}.
inline Language star_subword(std::size_t n) {
    detail::require(n >= 2, "star-subword", "n must be >= 2");
    return detail::checked(closure_prefix(n), "star-subword", n, ClosureKind::subword);
}

/// star-prefix(n) with a loop on a new letter d at every state.
inline Language kuratowski_prefix(std::size_t n) {
    detail::require(n >= 3, "kuratowski-prefix", "n must be >= 3");
    Dfa base = detail_star::star_prefix_dfa(n);
    Dfa d(Alphabet("abcd"), n);
    for (State q = 0; q < n; ++q) {
        for (char c : std::string("abc")) d.set(q, c, base.next(q, c));
        d.set(q, 'd', q);
        d.set_final(q, base.is_final(q));
    }
    return detail::checked(Language(d), "kuratowski-prefix", n, ClosureKind::prefix);
}

/// b* ∪ b* a^1 b ∪ ... ∪ b* a^{n-3} b over {a,b}.
inline Language kuratowski_suffix(std::size_t n) {
    detail::require(n >= 4, "kuratowski-suffix", "n must be >= 4");
    std::string expr = "b*";
    for (std::size_t i = 1; i + 3 <= n; ++i) expr += "|b*" + detail::repeat('a', i) + "b";
    return detail::checked(regex_to_language(expr, Alphabet("ab")), "kuratowski-suffix", n, ClosureKind::suffix);
}

/// b* a^i with 0 <= i <= n-2, over {a,b,c}.
inline Language kuratowski_subword(std::size_t n) {
    detail::require(n >= 2, "kuratowski-subword", "n must be >= 2");
    std::string expr = "b*(1";
    for (std::size_t i = 1; i + 2 <= n; ++i) expr += "|" + detail::repeat('a', i);
    expr += ")";
    return detail::checked(regex_to_language(expr, Alphabet("abc")), "kuratowski-subword", n, ClosureKind::subword);
}

/// {a^i | i <= n-2} over {a}.
inline Language unary_closed(std::size_t n) {
    detail::require(n >= 2, "unary-closed", "n must be >= 2");
    std::string expr = "1";
    for (std::size_t i = 1; i + 2 <= n; ++i) expr += "|" + detail::repeat('a', i);
    return detail::checked(regex_to_language(expr, Alphabet("a")), "unary-closed", n, ClosureKind::prefix);
}

} // namespace witness

/// Generic entry point; `m` is only used by the pair families.
inline Witness make_witness(WitnessFamily family, std::size_t n, std::size_t m = 0) {
    auto pair = [&](auto&& make) {
        detail::require(m >= 1, to_string(family), "pair families need m");
        auto [k, l] = make(m, n);
        return Witness{std::move(k), std::move(l)};
    };
    switch (family) {
    case WitnessFamily::closure_prefix: return {witness::closure_prefix(n), std::nullopt};
    case WitnessFamily::fig1: return {witness::fig1(n), std::nullopt};
    case WitnessFamily::fig2: return {witness::fig2(n), std::nullopt};
    case WitnessFamily::closure_subword: return {witness::closure_subword(n), std::nullopt};
    case WitnessFamily::product_prefix_pair: return pair(witness::product_prefix_pair);
    case WitnessFamily::product_suffix_pair: return pair(witness::product_suffix_pair);
    case WitnessFamily::product_subword_pair: return pair(witness::product_subword_pair);
    case WitnessFamily::star_prefix: return {witness::star_prefix(n), std::nullopt};
    case WitnessFamily::star_suffix_eq: return {witness::star_suffix_eq(n), std::nullopt};
    case WitnessFamily::star_suffix_neq: return {witness::star_suffix_neq(n), std::nullopt};
    case WitnessFamily::star_subword: return {witness::star_subword(n), std::nullopt};
    case WitnessFamily::kuratowski_prefix: return {witness::kuratowski_prefix(n), std::nullopt};
    case WitnessFamily::kuratowski_suffix: return {witness::kuratowski_suffix(n), std::nullopt};
    case WitnessFamily::kuratowski_subword: return {witness::kuratowski_subword(n), std::nullopt};
    case WitnessFamily::unary_closed: return {witness::unary_closed(n), std::nullopt};
    }
    throw parameter_error("unknown witness family");
}

} // namespace qlang

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "automaton.hpp"
#include "language.hpp"
#include "ops.hpp"

namespace qlang {

/// The four partial orders: is a prefix / suffix / factor / subword
/// (subsequence) of.
enum class ClosureKind { prefix, suffix, factor, subword };

inline constexpr std::array<ClosureKind, 4> all_closure_kinds{ClosureKind::prefix, ClosureKind::suffix,
                                                              ClosureKind::factor, ClosureKind::subword};

inline std::string_view to_string(ClosureKind k) {
    switch (k) {
    case ClosureKind::prefix: return "prefix";
    case ClosureKind::suffix: return "suffix";
    case ClosureKind::factor: return "factor";
    case ClosureKind::subword: return "subword";
    }
    return "?";
}

/// Ideal kind whose complements are the closed languages of `k`.
inline std::string_view ideal_name(ClosureKind k) {
    switch (k) {
    case ClosureKind::prefix: return "right";
    case ClosureKind::suffix: return "left";
    case ClosureKind::factor: return "two-sided";
    case ClosureKind::subword: return "all-sided";
    }
    return "?";
}

inline std::optional<ClosureKind> parse_closure_kind(std::string_view s) {
    for (auto k : all_closure_kinds)
        if (to_string(k) == s) return k;
    return std::nullopt;
}

/// Downward closure of L under the chosen order, built on the quotient
/// automaton. Non-empty states are the states other than the empty quotient.
///   prefix:  every non-empty state becomes final.
///   suffix:  every non-empty state becomes initial (nfa), determinize.
///   factor:  both of the above.
///   subword: drop the empty state, add an epsilon edge parallel to every
///            remaining edge; Σ* when there is no empty state.
inline Language closure(ClosureKind kind, const Language& l) {
    const Dfa& d = l.dfa();
    const std::optional<State> sink = l.empty_quotient();
    auto live = [&](State q) { return !sink || q != *sink; };

    if (kind == ClosureKind::prefix) {
        Dfa out = d;
        for (State q = 0; q < d.size(); ++q) out.set_final(q, live(q));
        return Language(out);
    }
    if (kind == ClosureKind::subword && !sink) return Language::universal(l.alphabet());

    const bool eps = kind == ClosureKind::subword;
    Nfa nfa(d.alphabet(), d.size(), eps);
    for (State q = 0; q < d.size(); ++q) {
        if (!live(q)) continue;
        for (std::size_t a = 0; a < d.letter_count(); ++a) {
            State t = d.next(q, a);
            if (!live(t)) continue;
            nfa.add_edge(q, a, t);
            if (eps) nfa.add_epsilon(q, t);
        }
        switch (kind) {
        case ClosureKind::suffix:
            nfa.set_initial(q);
            nfa.set_final(q, d.is_final(q));
            break;
        case ClosureKind::factor:
            nfa.set_initial(q);
            nfa.set_final(q);
            break;
        case ClosureKind::subword:
            nfa.set_final(q, d.is_final(q));
            break;
        case ClosureKind::prefix: break;
        }
    }
    if (kind == ClosureKind::subword && live(d.initial())) nfa.set_initial(d.initial());
    return Language(nfa);
}

inline bool is_closed(ClosureKind kind, const Language& l) {
    if (kind == ClosureKind::prefix) {
        // Fast path: every non-empty quotient accepts.
        auto sink = l.empty_quotient();
        for (State q = 0; q < l.dfa().size(); ++q)
            if ((!sink || q != *sink) && !l.dfa().is_final(q)) return false;
        return true;
    }
    return closure(kind, l) == l;
}

/// Fixpoint test only; kept next to the fast path so the two can be compared.
inline bool is_closed_by_fixpoint(ClosureKind kind, const Language& l) { return closure(kind, l) == l; }

/// Right / left / two-sided / all-sided ideal test via the complement.
inline bool is_ideal(ClosureKind kind, const Language& l) { return is_closed(kind, complement(l)); }

/// Closed kinds of L, in prefix, suffix, factor, subword order.
inline std::vector<ClosureKind> closed_kinds(const Language& l) {
    std::vector<ClosureKind> out;
    for (auto k : all_closure_kinds)
        if (is_closed(k, l)) out.push_back(k);
    return out;
}

class classification_error : public error {
public:
    using error::error;
};

/// Unary closed languages: ∅, a*, or {a^i | i <= n-2} with n = κ(L).
struct UnaryClassification {
    enum class Shape { empty, full, finite_range };
    Shape shape;
    std::size_t n; // κ(L)

    friend bool operator==(const UnaryClassification&, const UnaryClassification&) = default;
};

inline UnaryClassification classify_unary_closed(const Language& l) {
    if (l.alphabet().size() != 1) throw classification_error("classify_unary_closed: alphabet is not unary");
    if (!is_closed(ClosureKind::prefix, l)) throw classification_error("classify_unary_closed: language is not closed");
    if (l.is_empty()) return {UnaryClassification::Shape::empty, 1};
    if (l.is_universal()) return {UnaryClassification::Shape::full, 1};
    return {UnaryClassification::Shape::finite_range, l.complexity()};
}

} // namespace qlang

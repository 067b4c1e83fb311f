#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "automaton.hpp"

namespace qlang {

enum class Operation {
    closure_prefix,
    closure_suffix,
    closure_factor,
    closure_subword,
    union_of,
    intersection,
    difference,
    symmetric_difference,
    product,
    star,
    reversal,
};

enum class LanguageClass { prefix, suffix, factor, subword, unary_closed, regular };

/// Side conditions some cells split on.
enum class Variant {
    none,
    no_empty,   // suffix closure of a language without the empty quotient
    with_empty, // ... with the empty quotient
    star_fixed, // suffix-closed L with L = L*
    star_moving // suffix-closed L with L != L*
};

class bound_error : public error {
public:
    using error::error;
};

/// One entry of the bound tables: an operation applied within a class.
struct BoundCell {
    Operation op;
    LanguageClass cls;
    Variant variant = Variant::none;

    friend bool operator==(const BoundCell&, const BoundCell&) = default;
};

struct BoundArgs {
    std::size_t m = 0; // κ(K) for binary operations
    std::size_t n = 0; // κ(L)
    std::optional<std::size_t> k; // accepting quotients of K (or of L for star)
};

inline std::string_view to_string(Operation op) {
    switch (op) {
    case Operation::closure_prefix: return "closure-prefix";
    case Operation::closure_suffix: return "closure-suffix";
    case Operation::closure_factor: return "closure-factor";
    case Operation::closure_subword: return "closure-subword";
    case Operation::union_of: return "union";
    case Operation::intersection: return "intersection";
    case Operation::difference: return "difference";
    case Operation::symmetric_difference: return "symmetric-difference";
    case Operation::product: return "product";
    case Operation::star: return "star";
    case Operation::reversal: return "reversal";
    }
    return "?";
}

inline std::string_view to_string(LanguageClass c) {
    switch (c) {
    case LanguageClass::prefix: return "prefix";
    case LanguageClass::suffix: return "suffix";
    case LanguageClass::factor: return "factor";
    case LanguageClass::subword: return "subword";
    case LanguageClass::unary_closed: return "unary";
    case LanguageClass::regular: return "regular";
    }
    return "?";
}

inline std::string_view to_string(Variant v) {
    switch (v) {
    case Variant::none: return "";
    case Variant::no_empty: return "no-empty";
    case Variant::with_empty: return "with-empty";
    case Variant::star_fixed: return "eq";
    case Variant::star_moving: return "neq";
    }
    return "?";
}

inline bool is_closure(Operation op) {
    return op == Operation::closure_prefix || op == Operation::closure_suffix || op == Operation::closure_factor ||
           op == Operation::closure_subword;
}

inline bool is_boolean(Operation op) {
    return op == Operation::union_of || op == Operation::intersection || op == Operation::difference ||
           op == Operation::symmetric_difference;
}

inline int arity(Operation op) { return (is_boolean(op) || op == Operation::product) ? 2 : 1; }
inline int arity(const BoundCell& c) { return arity(c.op); }

inline bool is_closed_class(LanguageClass c) { return c != LanguageClass::regular; }

/// The formula needs the accepting-quotient count k.
inline bool uses_k(const BoundCell& c) {
    return (c.op == Operation::product && (c.cls == LanguageClass::suffix || c.cls == LanguageClass::regular)) ||
           (c.op == Operation::star && c.cls == LanguageClass::regular);
}

/// Check that the cell exists in the tables and its variant is meaningful.
inline void validate(const BoundCell& c) {
    const bool suffix_closure = c.op == Operation::closure_suffix && c.cls == LanguageClass::regular;
    const bool suffix_star = c.op == Operation::star && c.cls == LanguageClass::suffix;
    if (is_closure(c.op) && c.cls != LanguageClass::regular && c.cls != LanguageClass::unary_closed)
        throw bound_error("closure cells take arbitrary regular (or unary closed) operands");
    if (suffix_closure && c.variant != Variant::no_empty && c.variant != Variant::with_empty)
        throw bound_error("suffix closure bound depends on whether L has the empty quotient: use variant "
                          "no-empty or with-empty");
    if (suffix_star && c.variant != Variant::star_fixed && c.variant != Variant::star_moving)
        throw bound_error("suffix-closed star bound depends on whether L = L*: use variant eq or neq");
    if (!suffix_closure && !suffix_star && c.variant != Variant::none)
        throw bound_error("variant " + std::string(to_string(c.variant)) + " does not apply to " +
                          std::string(to_string(c.op)) + ":" + std::string(to_string(c.cls)));
}

namespace detail {
inline std::uint64_t pow2(std::size_t e) {
    if (e >= 63) throw bound_error("bound overflows 64 bits");
    return std::uint64_t{1} << e;
}
} // namespace detail

/// Upper bound on κ of the result. Degenerate operands (κ = 1) use the
/// explicit statements for product, star, reversal and closures; for boolean
/// operations the result is then one of ∅, Σ*, the other operand or its
/// complement, so the bound is max(m, n).
inline std::uint64_t bound_formula(const BoundCell& c, const BoundArgs& args) {
    validate(c);
    const std::uint64_t m = args.m;
    const std::uint64_t n = args.n;
    using detail::pow2;
    if (n < 1) throw bound_error("n must be >= 1");
    if (arity(c) == 2 && m < 1) throw bound_error("m must be >= 1");
    auto need_k = [&]() -> std::uint64_t {
        if (!args.k) throw bound_error("formula for " + std::string(to_string(c.op)) + ":" +
                                       std::string(to_string(c.cls)) + " needs k");
        std::uint64_t k = *args.k;
        const std::uint64_t of = c.op == Operation::star ? n : m;
        if (k > of) throw bound_error("k exceeds the number of quotients");
        return k;
    };

    if (is_closure(c.op)) {
        if (n == 1 || c.cls == LanguageClass::unary_closed) return n;
        switch (c.op) {
        case Operation::closure_prefix: return n;
        case Operation::closure_suffix: return c.variant == Variant::no_empty ? pow2(n) - 1 : pow2(n - 1);
        case Operation::closure_factor: return pow2(n - 1);
        default: return pow2(n - 2) + 1;
        }
    }

    if (is_boolean(c.op)) {
        if (m == 1 || n == 1) return std::max(m, n);
        switch (c.cls) {
        case LanguageClass::unary_closed:
            return c.op == Operation::difference ? m : std::max(m, n);
        case LanguageClass::prefix:
        case LanguageClass::factor:
        case LanguageClass::subword:
            if (c.op == Operation::intersection) return m * n - (m + n - 2);
            if (c.op == Operation::difference) return m * n - (n - 1);
            return m * n;
        case LanguageClass::suffix:
        case LanguageClass::regular: return m * n;
        }
    }

    if (c.op == Operation::product) {
        if (c.cls == LanguageClass::regular) {
            std::uint64_t k = need_k();
            return m * pow2(n) - k * pow2(n - 1);
        }
        if (m == 1 || n == 1) return 1;
        switch (c.cls) {
        case LanguageClass::prefix: return (m + 1) * pow2(n - 2);
        case LanguageClass::suffix: {
            std::uint64_t k = need_k();
            return (m - k) * n + k;
        }
        case LanguageClass::factor:
        case LanguageClass::subword: return m + n - 1;
        case LanguageClass::unary_closed: return m + n - 2;
        case LanguageClass::regular: break;
        }
    }

    if (c.op == Operation::star) {
        if (n == 1) return 2;
        switch (c.cls) {
        case LanguageClass::prefix: return pow2(n - 2) + 1;
        case LanguageClass::suffix: return c.variant == Variant::star_fixed ? n : n - 1;
        case LanguageClass::factor:
        case LanguageClass::subword:
        case LanguageClass::unary_closed: return 2;
        case LanguageClass::regular: {
            std::uint64_t k = need_k();
            if (k == 0) return pow2(n);
            return pow2(n - 1) + pow2(n - 1) / pow2(k);
        }
        }
    }

    if (c.op == Operation::reversal) {
        if (n == 1) return 1;
        switch (c.cls) {
        case LanguageClass::prefix: return pow2(n - 1);
        case LanguageClass::suffix: return pow2(n - 1) + 1;
        case LanguageClass::factor:
        case LanguageClass::subword: return pow2(n - 2) + 1;
        case LanguageClass::unary_closed: return n;
        case LanguageClass::regular: return pow2(n);
        }
    }
    throw bound_error("no formula for this cell");
}

/// Human-readable formula (for reports).
inline std::string formula_text(const BoundCell& c) {
    validate(c);
    if (is_closure(c.op)) {
        if (c.cls == LanguageClass::unary_closed) return "n";
        switch (c.op) {
        case Operation::closure_prefix: return "n";
        case Operation::closure_suffix: return c.variant == Variant::no_empty ? "2^n-1" : "2^(n-1)";
        case Operation::closure_factor: return "2^(n-1)";
        default: return "2^(n-2)+1";
        }
    }
    if (is_boolean(c.op)) {
        switch (c.cls) {
        case LanguageClass::unary_closed: return c.op == Operation::difference ? "m" : "max(m,n)";
        case LanguageClass::prefix:
        case LanguageClass::factor:
        case LanguageClass::subword:
            if (c.op == Operation::intersection) return "mn-(m+n-2)";
            if (c.op == Operation::difference) return "mn-(n-1)";
            return "mn";
        default: return "mn";
        }
    }
    if (c.op == Operation::product) {
        switch (c.cls) {
        case LanguageClass::prefix: return "(m+1)*2^(n-2)";
        case LanguageClass::suffix: return "(m-k)n+k";
        case LanguageClass::unary_closed: return "m+n-2";
        case LanguageClass::regular: return "m*2^n-k*2^(n-1)";
        default: return "m+n-1";
        }
    }
    if (c.op == Operation::star) {
        switch (c.cls) {
        case LanguageClass::prefix: return "2^(n-2)+1";
        case LanguageClass::suffix: return c.variant == Variant::star_fixed ? "n" : "n-1";
        case LanguageClass::regular: return "2^(n-1)+2^(n-k-1)";
        default: return "2";
        }
    }
    switch (c.cls) {
    case LanguageClass::prefix: return "2^(n-1)";
    case LanguageClass::suffix: return "2^(n-1)+1";
    case LanguageClass::unary_closed: return "n";
    case LanguageClass::regular: return "2^n";
    default: return "2^(n-2)+1";
    }
}

/// Smallest alphabet for which the bound is claimed to be attained.
inline std::size_t tightness_alphabet(const BoundCell& c, std::size_t n) {
    if (c.cls == LanguageClass::unary_closed) return 1;
    if (c.op == Operation::closure_subword) return n >= 4 ? n - 2 : 2;
    if (is_closure(c.op)) return 2;
    if (is_boolean(c.op)) return c.cls == LanguageClass::regular ? 2 : 4;
    if (c.op == Operation::product) return c.cls == LanguageClass::regular ? 2 : 3;
    if (c.op == Operation::star) return 2;
    switch (c.cls) {
    case LanguageClass::suffix:
    case LanguageClass::factor: return 3;
    case LanguageClass::subword: return 2 * n;
    default: return 2;
    }
}

/// Known disagreement between the summary table and the attained bound for a cell.
inline std::optional<std::string> table_discrepancy(const BoundCell& c) {
    if (c.op == Operation::product && c.cls == LanguageClass::prefix)
        return "summary table lists m2^{n-2} for prefix-closed product, but the bound (m+1)*2^(n-2) "
               "is attained by the witness pair; the empirical value governs the verdict";
    return std::nullopt;
}

/// The value printed in the summary table for that cell, where it differs.
inline std::optional<std::uint64_t> table_value(const BoundCell& c, const BoundArgs& args) {
    if (c.op == Operation::product && c.cls == LanguageClass::prefix && args.m >= 2 && args.n >= 2)
        return args.m * detail::pow2(args.n - 2);
    return std::nullopt;
}

/// Every cell of both tables, closure cells split by variant where needed.
inline std::vector<BoundCell> all_cells() {
    std::vector<BoundCell> cells;
    cells.push_back({Operation::closure_prefix, LanguageClass::regular});
    cells.push_back({Operation::closure_suffix, LanguageClass::regular, Variant::no_empty});
    cells.push_back({Operation::closure_suffix, LanguageClass::regular, Variant::with_empty});
    cells.push_back({Operation::closure_factor, LanguageClass::regular});
    cells.push_back({Operation::closure_subword, LanguageClass::regular});
    const LanguageClass classes[] = {LanguageClass::prefix,  LanguageClass::suffix,       LanguageClass::factor,
                                     LanguageClass::subword, LanguageClass::unary_closed, LanguageClass::regular};
    for (auto op : {Operation::union_of, Operation::intersection, Operation::difference, Operation::symmetric_difference,
                    Operation::product, Operation::star, Operation::reversal}) {
        for (auto cls : classes) {
            if (op == Operation::star && cls == LanguageClass::suffix) {
                cells.push_back({op, cls, Variant::star_fixed});
                cells.push_back({op, cls, Variant::star_moving});
            } else {
                cells.push_back({op, cls});
            }
        }
    }
    for (auto op : {Operation::closure_prefix, Operation::closure_suffix, Operation::closure_factor,
                    Operation::closure_subword})
        cells.push_back({op, LanguageClass::unary_closed});
    return cells;
}

inline std::string to_string(const BoundCell& c) {
    std::string s = std::string(to_string(c.op)) + ":" + std::string(to_string(c.cls));
    if (c.variant != Variant::none) s += ":" + std::string(to_string(c.variant));
    return s;
}

/// Parse "op:class[:variant]", e.g. "star:suffix:eq", "closure-suffix:regular:with-empty".
/// The class defaults to "regular" for closure operations.
inline BoundCell parse_cell(std::string_view text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto colon = text.find(':', start);
        parts.emplace_back(text.substr(start, colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    if (parts.empty() || parts.size() > 3) throw bound_error("cell must look like op:class[:variant]");
    BoundCell c{Operation::union_of, LanguageClass::regular};
    bool found = false;
    for (int i = 0; i <= static_cast<int>(Operation::reversal); ++i)
        if (to_string(static_cast<Operation>(i)) == parts[0]) {
            c.op = static_cast<Operation>(i);
            found = true;
        }
    if (parts[0] == "symdiff") {
        c.op = Operation::symmetric_difference;
        found = true;
    }
    if (!found) throw bound_error("unknown operation '" + parts[0] + "'");
    if (parts.size() >= 2) {
        found = false;
        for (int i = 0; i <= static_cast<int>(LanguageClass::regular); ++i)
            if (to_string(static_cast<LanguageClass>(i)) == parts[1]) {
                c.cls = static_cast<LanguageClass>(i);
                found = true;
            }
        if (!found) throw bound_error("unknown class '" + parts[1] + "'");
    } else if (!is_closure(c.op)) {
        throw bound_error("cell '" + parts[0] + "' needs a class");
    }
    if (parts.size() == 3) {
        found = false;
        for (int i = 1; i <= static_cast<int>(Variant::star_moving); ++i)
            if (to_string(static_cast<Variant>(i)) == parts[2]) {
                c.variant = static_cast<Variant>(i);
                found = true;
            }
        if (!found) throw bound_error("unknown variant '" + parts[2] + "'");
    }
    validate(c);
    return c;
}

} // namespace qlang

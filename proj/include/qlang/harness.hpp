#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bounds.hpp"
#include "closure.hpp"
#include "enumerate.hpp"
#include "language.hpp"
#include "ops.hpp"
#include "random.hpp"
#include "witnesses.hpp"

namespace qlang {

enum class Verdict { tight, within, violation, inconclusive, skip };

inline std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::tight: return "TIGHT";
    case Verdict::within: return "WITHIN";
    case Verdict::violation: return "VIOLATION";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    case Verdict::skip: return "SKIP";
    }
    return "?";
}

inline Verdict compare(std::uint64_t kappa, std::uint64_t bound) {
    if (kappa > bound) return Verdict::violation;
    return kappa == bound ? Verdict::tight : Verdict::within;
}

/// Membership of L in the class a cell ranges over.
inline bool in_class(LanguageClass c, const Language& l) {
    switch (c) {
    case LanguageClass::prefix: return is_closed(ClosureKind::prefix, l);
    case LanguageClass::suffix: return is_closed(ClosureKind::suffix, l);
    case LanguageClass::factor: return is_closed(ClosureKind::factor, l);
    case LanguageClass::subword: return is_closed(ClosureKind::subword, l);
    case LanguageClass::unary_closed: return l.alphabet().size() == 1 && is_closed(ClosureKind::prefix, l);
    case LanguageClass::regular: return true;
    }
    return false;
}

inline std::optional<ClosureKind> closure_kind_of(LanguageClass c) {
    switch (c) {
    case LanguageClass::prefix:
    case LanguageClass::unary_closed: return ClosureKind::prefix;
    case LanguageClass::suffix: return ClosureKind::suffix;
    case LanguageClass::factor: return ClosureKind::factor;
    case LanguageClass::subword: return ClosureKind::subword;
    case LanguageClass::regular: break;
    }
    return std::nullopt;
}

/// Result of the cell's operation; `k` is ignored for unary operations.
inline Language apply_operation(Operation op, const Language* k, const Language& l) {
    auto need = [&]() -> const Language& {
        if (!k) throw parameter_error(std::string(to_string(op)) + " needs two operands");
        return *k;
    };
    switch (op) {
    case Operation::closure_prefix: return closure(ClosureKind::prefix, l);
    case Operation::closure_suffix: return closure(ClosureKind::suffix, l);
    case Operation::closure_factor: return closure(ClosureKind::factor, l);
    case Operation::closure_subword: return closure(ClosureKind::subword, l);
    case Operation::union_of: return boolean(BooleanOp::union_of, need(), l);
    case Operation::intersection: return boolean(BooleanOp::intersection, need(), l);
    case Operation::difference: return boolean(BooleanOp::difference, need(), l);
    case Operation::symmetric_difference: return boolean(BooleanOp::symmetric_difference, need(), l);
    case Operation::product: return product(need(), l);
    case Operation::star: return star(l);
    case Operation::reversal: return reverse(l);
    }
    throw parameter_error("unknown operation");
}

/// Variant an operand falls under for cells that split on one; none otherwise.
inline Variant variant_of(const BoundCell& c, const Language& l) {
    if (c.op == Operation::closure_suffix && c.cls == LanguageClass::regular)
        return l.has_empty_quotient() ? Variant::with_empty : Variant::no_empty;
    if (c.op == Operation::star && c.cls == LanguageClass::suffix)
        return star(l) == l ? Variant::star_fixed : Variant::star_moving;
    return Variant::none;
}

/// The k the formula uses, read off the operands: accepting quotients of K
/// for products, accepting quotients other than L itself for star.
inline std::optional<std::size_t> k_of(const BoundCell& c, const Language* k, const Language& l) {
    if (!uses_k(c)) return std::nullopt;
    if (c.op == Operation::product) return k ? std::optional<std::size_t>(accepting_quotient_count(*k)) : std::nullopt;
    const Dfa& d = l.dfa();
    std::size_t count = accepting_quotient_count(l);
    if (d.is_final(d.initial())) --count;
    return count;
}

struct ReportPoint {
    std::size_t m = 0;
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::optional<std::uint64_t> kappa;
    std::optional<std::uint64_t> bound;
    Verdict verdict = Verdict::skip;
    std::uint64_t samples = 0; // operands examined (universal mode)
    std::string source;        // generator or search that produced the witness
    std::string reason;        // why a point was skipped or left open
};

struct VerificationReport {
    BoundCell cell;
    std::string mode; // "tightness" or "universal"
    std::vector<ReportPoint> points;
    std::vector<std::string> notes;
    std::optional<std::uint64_t> seed;
    double seconds = 0.0;

    std::size_t count(Verdict v) const {
        return static_cast<std::size_t>(
            std::count_if(points.begin(), points.end(), [&](const ReportPoint& p) { return p.verdict == v; }));
    }
    bool has_violation() const { return count(Verdict::violation) > 0; }
    /// Tightness runs fail when a generator witness falls short of the bound.
    bool passed() const {
        if (has_violation()) return false;
        if (mode != "tightness") return true;
        return std::none_of(points.begin(), points.end(), [](const ReportPoint& p) {
            return p.verdict == Verdict::within && p.source.rfind("search", 0) != 0;
        });
    }
};

inline std::string format_point(const BoundCell& cell, const ReportPoint& p) {
    std::ostringstream out;
    out << "CELL op=" << to_string(cell.op) << " class=" << to_string(cell.cls);
    if (cell.variant != Variant::none) out << " variant=" << to_string(cell.variant);
    if (arity(cell) == 2) out << " m=" << p.m;
    out << " n=" << p.n;
    if (p.k) out << " k=" << *p.k;
    out << " kappa=";
    if (p.kappa) out << *p.kappa; else out << '-';
    out << " bound=";
    if (p.bound) out << *p.bound; else out << '-';
    out << " verdict=" << to_string(p.verdict);
    if (p.samples) out << " samples=" << p.samples;
    if (!p.source.empty()) out << " source=" << p.source;
    if (!p.reason.empty()) out << " reason=\"" << p.reason << '"';
    return out.str();
}

inline std::string format_summary(const VerificationReport& r) {
    std::ostringstream out;
    out << "SUMMARY cell=" << to_string(r.cell) << " mode=" << r.mode << " points=" << r.points.size()
        << " tight=" << r.count(Verdict::tight) << " within=" << r.count(Verdict::within)
        << " violation=" << r.count(Verdict::violation) << " inconclusive=" << r.count(Verdict::inconclusive)
        << " skip=" << r.count(Verdict::skip);
    if (r.seed) out << " seed=" << *r.seed;
    out << " status=" << (r.passed() ? "PASS" : "FAIL");
    return out.str();
}

/// Report lines: one CELL line per point, NOTE lines, then SUMMARY.
inline std::string format_report(const VerificationReport& r) {
    std::string s;
    for (const auto& p : r.points) s += format_point(r.cell, p) + '\n';
    for (const auto& n : r.notes) s += "NOTE " + n + '\n';
    s += format_summary(r) + '\n';
    return s;
}

// ---------------------------------------------------------------------------
// Witness search

struct SearchOptions {
    std::size_t alphabet_size = 2;
    std::uint64_t budget = 20000; // operation evaluations
    std::uint64_t seed = 1;
    std::optional<std::size_t> k;        // required accepting-quotient count, if the cell uses k
    std::size_t exhaustive_max_states = 3;
};

struct WitnessHit {
    std::optional<Language> first; // K for binary cells
    Language second;                // L
    std::uint64_t kappa = 0;
    std::uint64_t bound = 0;
    std::optional<std::size_t> k;
    std::uint64_t tried = 0;
    bool exhaustive = false;
};

/// Searches class members for operands whose result attains the bound.
/// Candidate pools are cached across calls on the same searcher.
class WitnessSearcher {
public:
    explicit WitnessSearcher(std::uint64_t seed = 1) : rng_(seed), seed_(seed) {}

    std::optional<WitnessHit> find(const BoundCell& cell, std::size_t m, std::size_t n, const SearchOptions& opts) {
        validate(cell);
        rng_.seed(opts.seed);
        exhausted_ = false;
        const std::size_t letters = cell.cls == LanguageClass::unary_closed ? 1 : opts.alphabet_size;
        const Alphabet alphabet = Alphabet::first(letters);
        std::uint64_t tried = 0;

        auto accept_k = [&](const Language* k, const Language& l) {
            if (!opts.k) return true;
            auto actual = k_of(cell, k, l);
            return actual && *actual == *opts.k;
        };
        auto evaluate = [&](const Language* k, const Language& l) -> std::optional<WitnessHit> {
            if (variant_of(cell, l) != cell.variant) return std::nullopt;
            if (!accept_k(k, l)) return std::nullopt;
            ++tried;
            BoundArgs args{k ? k->complexity() : 0, l.complexity(), k_of(cell, k, l)};
            const std::uint64_t bound = bound_formula(cell, args);
            const std::uint64_t kappa = apply_operation(cell.op, k, l).complexity();
            if (kappa != bound) return std::nullopt;
            WitnessHit hit{k ? std::optional<Language>(*k) : std::nullopt, l, kappa, bound, args.k, tried, false};
            return hit;
        };

        // exhaustive phase over small class members
        const bool small = n <= opts.exhaustive_max_states && (arity(cell) == 1 || m <= opts.exhaustive_max_states);
        if (small) {
            const auto& pool_n = exhaustive_pool(cell.cls, n, alphabet);
            if (arity(cell) == 1) {
                for (const auto& l : pool_n) {
                    if (tried >= opts.budget) return std::nullopt;
                    if (auto hit = evaluate(nullptr, l)) return mark(*hit, true);
                }
            } else {
                const auto& pool_m = exhaustive_pool(cell.cls, m, alphabet);
                for (const auto& k : pool_m)
                    for (const auto& l : pool_n) {
                        if (tried >= opts.budget) return std::nullopt;
                        if (auto hit = evaluate(&k, l)) return mark(*hit, true);
                    }
            }
            if (is_complete(cell.cls, n, alphabet) && (arity(cell) == 1 || is_complete(cell.cls, m, alphabet))) {
                exhausted_ = true;
                return std::nullopt;
            }
        }

        // random phase
        std::size_t stall = 0;
        while (tried < opts.budget && stall < 50 * opts.budget + 1000) {
            auto l = sample(cell.cls, n, alphabet);
            if (!l) {
                ++stall;
                continue;
            }
            if (arity(cell) == 1) {
                if (auto hit = evaluate(nullptr, *l)) return mark(*hit, false);
                ++stall;
                continue;
            }
            auto k = sample(cell.cls, m, alphabet);
            if (!k) {
                ++stall;
                continue;
            }
            if (auto hit = evaluate(&*k, *l)) return mark(*hit, false);
            ++stall;
        }
        return std::nullopt;
    }

    std::uint64_t seed() const noexcept { return seed_; }
    /// The last failed search covered every candidate.
    bool exhausted() const noexcept { return exhausted_; }

private:
    using PoolKey = std::tuple<int, std::size_t, std::string>;

    static WitnessHit mark(WitnessHit h, bool exhaustive) {
        h.exhaustive = exhaustive;
        return h;
    }

    const std::vector<Language>& exhaustive_pool(LanguageClass cls, std::size_t n, const Alphabet& alphabet) {
        PoolKey key{static_cast<int>(cls), n, alphabet.letters()};
        auto it = pools_.find(key);
        if (it != pools_.end()) return it->second;
        std::vector<Language> pool;
        EnumerationLimits limits;
        limits.override_guard = true;
        enumerate_languages(n, alphabet, [&](const Language& l) {
            if (in_class(cls, l)) pool.push_back(l);
            return true;
        }, limits);
        complete_.insert(key);
        return pools_.emplace(key, std::move(pool)).first->second;
    }

    bool is_complete(LanguageClass cls, std::size_t n, const Alphabet& alphabet) const {
        return complete_.count(PoolKey{static_cast<int>(cls), n, alphabet.letters()}) > 0;
    }

    /// A random class member with complexity exactly n, or none this round.
    std::optional<Language> sample(LanguageClass cls, std::size_t n, const Alphabet& alphabet) {
        std::uniform_int_distribution<std::size_t> extra(0, 3);
        std::bernoulli_distribution coin(0.5);
        const std::size_t states = std::max<std::size_t>(1, n + extra(rng_) - (n > 2 ? 1 : 0));
        Language candidate(random_dfa(rng_, states, alphabet, coin(rng_) ? 0.3 : 0.0));
        if (auto kind = closure_kind_of(cls)) {
            if (!in_class(cls, candidate)) candidate = closure(*kind, candidate);
        }
        if (candidate.complexity() != n) return std::nullopt;
        return candidate;
    }

    Rng rng_;
    std::uint64_t seed_;
    std::map<PoolKey, std::vector<Language>> pools_;
    std::set<PoolKey> complete_;
    bool exhausted_ = false;
};

inline std::optional<WitnessHit> find_witness(const BoundCell& cell, std::size_t m, std::size_t n,
                                              const SearchOptions& opts = {}) {
    WitnessSearcher searcher(opts.seed);
    return searcher.find(cell, m, n, opts);
}

// ---------------------------------------------------------------------------
// Tightness

struct Grid {
    std::vector<std::size_t> m; // ignored for unary cells
    std::vector<std::size_t> n;
    std::optional<std::size_t> k;
};

inline std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

struct GeneratedWitness {
    std::optional<Language> first;
    Language second;
    std::string family;
};

/// Witness family for the cell at (m, n), when one is known.
inline std::optional<GeneratedWitness> generator_for(const BoundCell& cell, std::size_t m, std::size_t n,
                                                     std::optional<std::size_t> k = std::nullopt) {
    using WF = WitnessFamily;
    auto single = [&](WF f, std::size_t lo) -> std::optional<GeneratedWitness> {
        if (n < lo) return std::nullopt;
        return GeneratedWitness{std::nullopt, make_witness(f, n).first, std::string(to_string(f))};
    };
    auto pair = [&](WF f) -> std::optional<GeneratedWitness> {
        if (m < 2 || n < 2) return std::nullopt;
        Witness w = make_witness(f, n, m);
        return GeneratedWitness{w.first, *w.second, std::string(to_string(f))};
    };
    if (cell.cls == LanguageClass::regular) {
        switch (cell.op) {
        case Operation::closure_prefix: return single(WF::closure_prefix, 2);
        case Operation::closure_suffix:
            return single(cell.variant == Variant::no_empty ? WF::fig1 : WF::fig2, 2);
        case Operation::closure_factor: return single(WF::fig2, 2);
        case Operation::closure_subword: return single(WF::closure_subword, 2);
        default: return std::nullopt;
        }
    }
    switch (cell.op) {
    case Operation::product:
        if (cell.cls == LanguageClass::prefix) return pair(WF::product_prefix_pair);
        if (cell.cls == LanguageClass::suffix && (!k || *k == 1)) return pair(WF::product_suffix_pair);
        if (cell.cls == LanguageClass::subword || cell.cls == LanguageClass::factor)
            return pair(WF::product_subword_pair);
        return std::nullopt;
    case Operation::star:
        if (cell.cls == LanguageClass::prefix) return single(WF::star_prefix, 3);
        if (cell.cls == LanguageClass::suffix)
            return single(cell.variant == Variant::star_fixed ? WF::star_suffix_eq : WF::star_suffix_neq, 3);
        if (cell.cls == LanguageClass::subword || cell.cls == LanguageClass::factor) return single(WF::star_subword, 2);
        return std::nullopt;
    default: return std::nullopt;
    }
}

struct TightnessOptions {
    SearchOptions search;            // fallback search when no generator exists
    std::size_t max_search_letters = 4;
    bool search_fallback = true;
};

namespace detail {

inline void add_table_note(VerificationReport& r) {
    auto note = table_discrepancy(r.cell);
    if (!note) return;
    std::size_t disagree = 0;
    std::size_t checked = 0;
    for (const auto& p : r.points) {
        if (!p.kappa) continue;
        auto tv = table_value(r.cell, BoundArgs{p.m, p.n, p.k});
        if (!tv) continue;
        ++checked;
        if (*p.kappa != *tv) ++disagree;
    }
    std::ostringstream out;
    out << "cell=" << to_string(r.cell) << " table=\"m2^{n-2}\" empirical=\"(m+1)*2^(n-2)\" points=" << checked
        << " disagree=" << disagree << " governs=empirical: " << *note;
    r.notes.push_back(out.str());
}

} // namespace detail

/// Builds witnesses at each grid point and checks κ = bound exactly. Points
/// without a generator fall back to search (TIGHT or INCONCLUSIVE).
inline VerificationReport verify_tightness(const BoundCell& cell, const Grid& grid, const TightnessOptions& opts = {}) {
    validate(cell);
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report{cell, "tightness", {}, {}, std::nullopt, 0.0};
    WitnessSearcher searcher(opts.search.seed);
    const std::vector<std::size_t> ms = arity(cell) == 2 ? grid.m : std::vector<std::size_t>{0};
    for (std::size_t m : ms) {
        for (std::size_t n : grid.n) {
            ReportPoint p;
            p.m = m;
            p.n = n;
            std::optional<GeneratedWitness> gen;
            try {
                gen = generator_for(cell, m, n, grid.k);
            } catch (const parameter_error& e) {
                p.reason = e.what();
            }
            if (gen) {
                const Language* k = gen->first ? &*gen->first : nullptr;
                if (!in_class(cell.cls, gen->second) || (k && !in_class(cell.cls, *k)))
                    throw structure_error("generator " + gen->family + " left the class");
                BoundArgs args{k ? k->complexity() : 0, gen->second.complexity(), k_of(cell, k, gen->second)};
                p.k = args.k;
                p.bound = bound_formula(cell, args);
                p.kappa = apply_operation(cell.op, k, gen->second).complexity();
                p.verdict = compare(*p.kappa, *p.bound);
                p.source = gen->family;
            } else if (opts.search_fallback) {
                report.seed = opts.search.seed;
                const std::size_t lo = cell.cls == LanguageClass::unary_closed ? 1 : 2;
                const std::size_t hi = cell.cls == LanguageClass::unary_closed
                                           ? 1
                                           : std::min(opts.max_search_letters,
                                                      std::max(lo, tightness_alphabet(cell, n)));
                std::optional<WitnessHit> hit;
                for (std::size_t s = lo; s <= hi && !hit; ++s) {
                    SearchOptions so = opts.search;
                    so.alphabet_size = s;
                    so.k = grid.k;
                    hit = searcher.find(cell, m, n, so);
                }
                if (hit) {
                    p.k = hit->k;
                    p.kappa = hit->kappa;
                    p.bound = hit->bound;
                    p.verdict = Verdict::tight;
                    p.source = hit->exhaustive ? "search-exhaustive" : "search-random";
                    p.samples = hit->tried;
                } else {
                    p.k = grid.k;
                    try {
                        p.bound = bound_formula(cell, BoundArgs{m, n, grid.k});
                    } catch (const bound_error&) {
                    }
                    p.verdict = Verdict::inconclusive;
                    p.source = "search";
                    p.reason = searcher.exhausted()
                                   ? "exhaustive search over " + std::to_string(hi) + " letters found none"
                                   : "no witness within budget up to " + std::to_string(hi) + " letters";
                }
            } else {
                p.verdict = Verdict::skip;
                if (p.reason.empty()) p.reason = "no generator";
            }
            report.points.push_back(p);
        }
    }
    detail::add_table_note(report);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------
// Universality

struct UniversalOptions {
    std::size_t letters = 2; // forced to 1 for the unary class
    std::size_t max_m = 0;   // 0: same as max_states
};

/// Minimal class members with 1..max_states quotients over a small alphabet.
inline std::vector<Language> class_members(LanguageClass cls, std::size_t max_states, std::size_t letters) {
    const Alphabet alphabet = Alphabet::first(cls == LanguageClass::unary_closed ? 1 : letters);
    return languages_up_to(max_states, alphabet, [&](const Language& l) { return in_class(cls, l); });
}

/// Applies the operation to every class member (or pair) up to max_states
/// and checks κ against the bound; one point per (m, n[, k]) with the
/// largest κ observed.
inline VerificationReport verify_universal(const BoundCell& cell, std::size_t max_states,
                                           const UniversalOptions& opts = {}) {
    validate(cell);
    const std::size_t limit = arity(cell) == 2 ? 4 : 5;
    if (max_states > limit)
        throw parameter_error("universal sweep limited to " + std::to_string(limit) + " states for this arity");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report{cell, "universal", {}, {}, std::nullopt, 0.0};
    const auto members = class_members(cell.cls, std::max(max_states, opts.max_m), opts.letters);

    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::map<Key, ReportPoint> points;
    auto record = [&](const Language* k, const Language& l) {
        if (variant_of(cell, l) != cell.variant) return;
        BoundArgs args{k ? k->complexity() : 0, l.complexity(), k_of(cell, k, l)};
        const std::uint64_t bound = bound_formula(cell, args);
        const std::uint64_t kappa = apply_operation(cell.op, k, l).complexity();
        Key key{args.m, args.n, args.k ? *args.k + 1 : 0};
        auto& p = points[key];
        p.m = args.m;
        p.n = args.n;
        p.k = args.k;
        p.bound = bound;
        ++p.samples;
        if (kappa > bound) {
            p.verdict = Verdict::violation;
            p.kappa = std::max(p.kappa.value_or(0), kappa);
        } else if (p.verdict != Verdict::violation) {
            p.kappa = std::max(p.kappa.value_or(0), kappa);
            p.verdict = compare(*p.kappa, bound);
        }
    };
    if (arity(cell) == 1) {
        for (const auto& l : members)
            if (l.complexity() <= max_states) record(nullptr, l);
    } else {
        const std::size_t max_m = opts.max_m ? opts.max_m : max_states;
        for (const auto& k : members) {
            if (k.complexity() > max_m) continue;
            for (const auto& l : members)
                if (l.complexity() <= max_states) record(&k, l);
        }
    }
    for (auto& [key, p] : points) {
        p.source = "enumeration";
        report.points.push_back(p);
    }
    detail::add_table_note(report);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace qlang

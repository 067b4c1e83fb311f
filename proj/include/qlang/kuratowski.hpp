#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "closure.hpp"
#include "language.hpp"
#include "ops.hpp"

namespace qlang {

enum class Generator { plus, star };

inline std::string_view to_string(Generator g) { return g == Generator::plus ? "plus" : "star"; }
inline char symbol(Generator g) { return g == Generator::plus ? '+' : '*'; }

inline std::optional<Generator> parse_generator(std::string_view s) {
    if (s == "plus" || s == "+") return Generator::plus;
    if (s == "star" || s == "*") return Generator::star;
    return std::nullopt;
}

/// One language of an orbit, labelled by the shortest operator word reaching
/// it from L ("L", "L-", "L*-*", ...).
struct OrbitEntry {
    std::string expression;
    Language language;
    std::size_t complexity;
};

struct Orbit {
    Generator generator;
    std::vector<OrbitEntry> entries; // breadth-first order

    std::size_t size() const noexcept { return entries.size(); }

    const OrbitEntry* find(std::string_view expression) const {
        for (const auto& e : entries)
            if (e.expression == expression) return &e;
        return nullptr;
    }
    const OrbitEntry* find(const Language& l) const {
        for (const auto& e : entries)
            if (e.language == l) return &e;
        return nullptr;
    }
};

inline Language apply_generator(Generator g, const Language& l) { return g == Generator::plus ? plus(l) : star(l); }

/// Evaluates an operator word such as "L-*-" (the leading L is optional).
inline Language evaluate_expression(const Language& l, std::string_view expression) {
    if (!expression.empty() && expression.front() == 'L') expression.remove_prefix(1);
    Language out = l;
    for (char c : expression) {
        if (c == '-') out = complement(out);
        else if (c == '*') out = star(out);
        else if (c == '+') out = plus(out);
        else throw parameter_error(std::string("unknown operator '") + c + "' in orbit expression");
    }
    return out;
}

/// Closure of {L} under complement and the generator, breadth first with
/// complement tried before the generator.
inline Orbit orbit(const Language& l, Generator g) {
    Orbit out{g, {}};
    out.entries.push_back({"L", l, l.complexity()});
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        const std::string base = out.entries[i].expression;
        const Language current = out.entries[i].language;
        for (int step = 0; step < 2; ++step) {
            Language next = step == 0 ? complement(current) : apply_generator(g, current);
            if (out.find(next)) continue;
            const std::size_t kappa = next.complexity();
            out.entries.push_back({base + (step == 0 ? '-' : symbol(g)), std::move(next), kappa});
            queue.push_back(out.entries.size() - 1);
        }
    }
    return out;
}

inline std::map<std::string, std::size_t> orbit_complexities(const Language& l, Generator g) {
    std::map<std::string, std::size_t> out;
    for (const auto& e : orbit(l, g).entries) out.emplace(e.expression, e.complexity);
    return out;
}

/// Every entry maps to an entry under both operations.
inline bool is_orbit_closed(const Orbit& o) {
    for (const auto& e : o.entries)
        if (!o.find(complement(e.language)) || !o.find(apply_generator(o.generator, e.language))) return false;
    return true;
}

struct OrbitCapFailure {
    Language language;
    Generator generator;
    std::size_t size;
    std::size_t cap;
};

struct OrbitCapReport {
    std::size_t checked = 0;
    std::size_t closed = 0; // closed under at least one of the four orders
    std::size_t max_plus = 0;
    std::size_t max_star = 0;
    std::vector<OrbitCapFailure> failures;

    bool passed() const noexcept { return failures.empty(); }
};

inline constexpr std::size_t plus_cap = 10;
inline constexpr std::size_t star_cap = 14;
inline constexpr std::size_t closed_plus_cap = 4;
inline constexpr std::size_t closed_star_cap = 8;

/// Orbit sizes of every sampled language against the caps: 10 and 14 in
/// general, 4 and 8 for closed languages.
inline OrbitCapReport check_orbit_caps(const std::vector<Language>& sample) {
    OrbitCapReport r;
    for (const auto& l : sample) {
        ++r.checked;
        const bool is_closed_lang = !closed_kinds(l).empty();
        if (is_closed_lang) ++r.closed;
        const std::size_t p = orbit(l, Generator::plus).size();
        const std::size_t s = orbit(l, Generator::star).size();
        r.max_plus = std::max(r.max_plus, p);
        r.max_star = std::max(r.max_star, s);
        const std::size_t pc = is_closed_lang ? closed_plus_cap : plus_cap;
        const std::size_t sc = is_closed_lang ? closed_star_cap : star_cap;
        if (p > pc) r.failures.push_back({l, Generator::plus, p, pc});
        if (s > sc) r.failures.push_back({l, Generator::star, s, sc});
    }
    return r;
}

} // namespace qlang

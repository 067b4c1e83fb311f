#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "automaton.hpp"
#include "language.hpp"
#include "minimize.hpp"

namespace qlang {

struct EnumerationLimits {
    std::size_t max_states = 5;
    std::size_t max_letters = 2;
    bool override_guard = false;
};

inline void check_enumeration_guard(std::size_t n, std::size_t letters, const EnumerationLimits& limits) {
    if (n == 0) throw parameter_error("enumeration needs at least one state");
    if (letters == 0) throw parameter_error("enumeration needs at least one letter");
    if (!limits.override_guard && (n > limits.max_states || letters > limits.max_letters))
        throw parameter_error("enumeration of " + std::to_string(n) + "-state machines over " +
                              std::to_string(letters) + " letters exceeds the guard (" +
                              std::to_string(limits.max_states) + " states, " + std::to_string(limits.max_letters) +
                              " letters); override to proceed");
}

/// Every complete dfa with exactly n states over the first `letters` letters,
/// initial state 0. Transition tables are visited in lexicographic order
/// (slot (0,a) most significant); for each table every final set is visited
/// in increasing bitmask order.
class DfaEnumerator {
public:
    DfaEnumerator(std::size_t n, std::size_t letters, EnumerationLimits limits = {})
        : n_(n), alphabet_((check_enumeration_guard(n, letters, limits), Alphabet::first(letters))),
          slots_(n * letters, 0), current_(alphabet_, n) {}

    /// Advances to the next machine; false once all have been produced.
    bool next() {
        if (done_) return false;
        if (!started_) {
            started_ = true;
            load();
            return true;
        }
        if (++mask_ < (std::uint64_t{1} << n_)) {
            load_finals();
            return true;
        }
        mask_ = 0;
        // odometer, least significant slot last
        std::size_t i = slots_.size();
        while (i > 0) {
            --i;
            if (++slots_[i] < n_) {
                load();
                return true;
            }
            slots_[i] = 0;
        }
        done_ = true;
        return false;
    }

    const Dfa& current() const noexcept { return current_; }

    /// Number of machines the enumeration produces: n^(n k) 2^n.
    static std::uint64_t count(std::size_t n, std::size_t letters) {
        std::uint64_t total = std::uint64_t{1} << n;
        for (std::size_t i = 0; i < n * letters; ++i) total *= n;
        return total;
    }

private:
    void load() {
        const std::size_t k = alphabet_.size();
        for (std::size_t s = 0; s < slots_.size(); ++s) current_.set(static_cast<State>(s / k), s % k, slots_[s]);
        load_finals();
    }
    void load_finals() {
        for (State q = 0; q < n_; ++q) current_.set_final(q, (mask_ >> q) & 1U);
    }

    std::size_t n_;
    Alphabet alphabet_;
    std::vector<State> slots_;
    std::uint64_t mask_ = 0;
    bool started_ = false;
    bool done_ = false;
    Dfa current_;
};

/// Visit every complete dfa (see DfaEnumerator) accepted by `filter`. The
/// visitor returns false to stop early.
template <typename Visitor, typename Filter>
void enumerate_dfas(std::size_t n, std::size_t letters, Visitor&& visit, Filter&& filter, EnumerationLimits limits = {}) {
    DfaEnumerator e(n, letters, limits);
    while (e.next())
        if (filter(e.current()) && !visit(e.current())) return;
}

template <typename Visitor>
void enumerate_dfas(std::size_t n, std::size_t letters, Visitor&& visit, EnumerationLimits limits = {}) {
    enumerate_dfas(n, letters, std::forward<Visitor>(visit), [](const Dfa&) { return true; }, limits);
}

namespace detail {

template <typename Visitor>
bool canonical_tables(Dfa& d, std::size_t slot, State max_used, Visitor& visit) {
    const std::size_t n = d.size();
    const std::size_t k = d.letter_count();
    if (slot == n * k) return max_used + 1 == n ? visit(d) : true;
    const auto q = static_cast<State>(slot / k);
    if (slot % k == 0 && q > max_used) return true; // q would be unreachable
    const State limit = std::min<State>(max_used + 1, static_cast<State>(n - 1));
    for (State t = 0; t <= limit; ++t) {
        d.set(q, slot % k, t);
        if (!canonical_tables(d, slot + 1, std::max(max_used, t), visit)) return false;
    }
    return true;
}

} // namespace detail

/// Every regular language with complexity exactly n over `alphabet`, each
/// produced once: transition tables already in breadth-first canonical form,
/// combined with every final set, keeping the minimal machines.
template <typename Visitor>
void enumerate_languages(std::size_t n, const Alphabet& alphabet, Visitor&& visit, EnumerationLimits limits = {}) {
    check_enumeration_guard(n, alphabet.size(), limits);
    Dfa d(alphabet, n);
    auto on_table = [&](Dfa& table) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            for (State q = 0; q < n; ++q) table.set_final(q, (mask >> q) & 1U);
            if (n > 1 && detail::coarsest_partition(table).blocks() != n) continue;
            if (!visit(Language(table))) return false;
        }
        return true;
    };
    detail::canonical_tables(d, 0, 0, on_table);
}

/// All languages with complexity 1..max_states, in increasing complexity.
inline std::vector<Language> languages_up_to(std::size_t max_states, const Alphabet& alphabet,
                                             const std::function<bool(const Language&)>& filter = nullptr,
                                             EnumerationLimits limits = {}) {
    std::vector<Language> out;
    for (std::size_t n = 1; n <= max_states; ++n)
        enumerate_languages(n, alphabet, [&](const Language& l) {
            if (!filter || filter(l)) out.push_back(l);
            return true;
        }, limits);
    return out;
}

} // namespace qlang

#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "automaton.hpp"

namespace qlang {

namespace detail {

inline constexpr State no_state = std::numeric_limits<State>::max();

/// Refinable partition over 0..n-1 (Valmari & Lehtinen). Elements of a block
/// occupy a contiguous range of `elems`; marked elements are moved to the
/// front of their block.
class RefinablePartition {
public:
    explicit RefinablePartition(std::size_t n) : elems_(n), loc_(n), block_(n, 0) {
        for (std::size_t i = 0; i < n; ++i) {
            elems_[i] = static_cast<State>(i);
            loc_[i] = static_cast<State>(i);
        }
        if (n > 0) {
            first_.push_back(0);
            past_.push_back(static_cast<State>(n));
            marked_.push_back(0);
        }
    }

    std::size_t blocks() const noexcept { return first_.size(); }
    State block_of(State e) const { return block_[e]; }
    State first(State b) const { return first_[b]; }
    State past(State b) const { return past_[b]; }
    State element(State i) const { return elems_[i]; }

    void mark(State e) {
        State b = block_[e];
        State i = loc_[e];
        State j = first_[b] + marked_[b];
        if (i < j) return;
        std::swap(elems_[i], elems_[j]);
        loc_[elems_[i]] = i;
        loc_[elems_[j]] = j;
        if (marked_[b] == 0) touched_.push_back(b);
        ++marked_[b];
    }

    /// Split every touched block into its marked and unmarked part; the
    /// smaller part becomes a new block. Calls `on_new(block)` for each one.
    template <typename F>
    void split(F&& on_new) {
        for (State b : touched_) {
            State mid = first_[b] + marked_[b];
            if (mid == past_[b]) {
                marked_[b] = 0;
                continue;
            }
            State nb = static_cast<State>(first_.size());
            if (marked_[b] <= past_[b] - mid) {
                first_.push_back(first_[b]);
                past_.push_back(mid);
                first_[b] = mid;
            } else {
                first_.push_back(mid);
                past_.push_back(past_[b]);
                past_[b] = mid;
            }
            marked_[b] = 0;
            marked_.push_back(0);
            for (State i = first_[nb]; i < past_[nb]; ++i) block_[elems_[i]] = nb;
            on_new(nb);
        }
        touched_.clear();
    }

private:
    std::vector<State> elems_, loc_, block_;
    std::vector<State> first_, past_, marked_;
    std::vector<State> touched_;
};

/// Renumber the states reachable from the initial state in breadth-first
/// order, expanding letters in alphabet order. Unreachable states are dropped.
inline Dfa bfs_renumber(const Dfa& dfa) {
    const std::size_t k = dfa.letter_count();
    std::vector<State> order;
    std::vector<State> id(dfa.size(), no_state);
    order.push_back(dfa.initial());
    id[dfa.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
            State t = dfa.next(order[i], a);
            if (id[t] == no_state) {
                id[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    }
    Dfa out(dfa.alphabet(), order.size());
    for (State i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) out.set(i, a, id[dfa.next(order[i], a)]);
        out.set_final(i, dfa.is_final(order[i]));
    }
    return out;
}

/// Hopcroft refinement on an accessible dfa; returns the block of each state.
inline RefinablePartition coarsest_partition(const Dfa& dfa) {
    const std::size_t n = dfa.size();
    const std::size_t k = dfa.letter_count();

    // Predecessor lists per letter in compressed form.
    std::vector<std::vector<State>> pred_start(k, std::vector<State>(n + 1, 0));
    std::vector<std::vector<State>> pred(k, std::vector<State>(n));
    for (std::size_t a = 0; a < k; ++a) {
        auto& start = pred_start[a];
        for (State q = 0; q < n; ++q) ++start[dfa.next(q, a) + 1];
        for (std::size_t i = 1; i <= n; ++i) start[i] += start[i - 1];
        std::vector<State> fill(start.begin(), start.end() - 1);
        for (State q = 0; q < n; ++q) pred[a][fill[dfa.next(q, a)]++] = q;
    }

    RefinablePartition part(n);
    std::vector<State> worklist;
    for (State q = 0; q < n; ++q)
        if (dfa.is_final(q)) part.mark(q);
    bool split_happened = false;
    part.split([&](State nb) {
        worklist.push_back(nb);
        split_happened = true;
    });
    if (!split_happened) return part;

    std::vector<State> splitter;
    while (!worklist.empty()) {
        State b = worklist.back();
        worklist.pop_back();
        splitter.assign(0, 0);
        for (State i = part.first(b); i < part.past(b); ++i) splitter.push_back(part.element(i));
        for (std::size_t a = 0; a < k; ++a) {
            for (State t : splitter)
                for (State i = pred_start[a][t]; i < pred_start[a][t + 1]; ++i) part.mark(pred[a][i]);
            part.split([&](State nb) { worklist.push_back(nb); });
        }
    }
    return part;
}

inline Dfa quotient_by(const Dfa& dfa, const RefinablePartition& part) {
    Dfa out(dfa.alphabet(), part.blocks(), part.block_of(dfa.initial()));
    for (State b = 0; b < part.blocks(); ++b) {
        State rep = part.element(part.first(b));
        for (std::size_t a = 0; a < dfa.letter_count(); ++a) out.set(b, a, part.block_of(dfa.next(rep, a)));
        out.set_final(b, dfa.is_final(rep));
    }
    return out;
}

} // namespace detail

/// Minimal complete dfa for the same language: unreachable states are
/// removed, then equivalent states are merged by Hopcroft's algorithm. The
/// result is numbered canonically.
inline Dfa minimize(const Dfa& dfa) {
    Dfa accessible = detail::bfs_renumber(dfa);
    auto part = detail::coarsest_partition(accessible);
    if (part.blocks() == accessible.size()) return accessible;
    return detail::bfs_renumber(detail::quotient_by(accessible, part));
}

/// Canonical numbering of a minimal dfa. Rejects machines with unreachable
/// or equivalent states.
inline Dfa canonicalize(const Dfa& dfa) {
    Dfa renumbered = detail::bfs_renumber(dfa);
    if (renumbered.size() != dfa.size())
        throw structure_error("canonicalize: dfa has unreachable states");
    if (detail::coarsest_partition(renumbered).blocks() != renumbered.size())
        throw structure_error("canonicalize: dfa has equivalent states");
    return renumbered;
}

} // namespace qlang

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlang {

using State = std::uint32_t;

/// A word is a sequence of letters; the empty string denotes epsilon.
using Word = std::string;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a letter does not belong to the alphabet it is used with,
/// or when two alphabets cannot be combined as requested.
class alphabet_error : public error {
public:
    using error::error;
};

/// Out-of-range parameters (witness families, enumeration guards, ...).
class parameter_error : public error {
public:
    using error::error;
};

class structure_error : public error {
public:
    using error::error;
};

inline bool is_valid_letter(char c) noexcept {
    auto u = static_cast<unsigned char>(c);
    return u > 0x20 && u < 0x7f && c != '#' && c != '~';
}

/// Ordered, non-empty set of single-character letters. Letters are kept in
/// ascending character order so that alphabets compare by value.
class Alphabet {
public:
    Alphabet() { index_.fill(-1); }

    explicit Alphabet(std::string_view letters) {
        for (char c : letters) {
            if (c == ' ' || c == ',' || c == '\t') continue;
            if (!is_valid_letter(c))
                throw alphabet_error(std::string("invalid letter '") + c + "'");
            letters_.push_back(c);
        }
        std::sort(letters_.begin(), letters_.end());
        letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
        if (letters_.empty()) throw alphabet_error("alphabet must not be empty");
        index_.fill(-1);
        for (std::size_t i = 0; i < letters_.size(); ++i)
            index_[static_cast<unsigned char>(letters_[i])] = static_cast<std::int8_t>(i);
    }

    /// The first `k` letters of a, b, c, ...
    static Alphabet first(std::size_t k) {
        if (k == 0 || k > 26) throw alphabet_error("alphabet size must be in 1..26");
        std::string s;
        for (std::size_t i = 0; i < k; ++i) s.push_back(static_cast<char>('a' + i));
        return Alphabet(s);
    }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }
    const std::string& letters() const noexcept { return letters_; }
    bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }

    std::size_t index_of(char c) const {
        int i = index_[static_cast<unsigned char>(c)];
        if (i < 0) throw alphabet_error(std::string("letter '") + c + "' is not in alphabet {" + letters_ + "}");
        return static_cast<std::size_t>(i);
    }

    bool includes(const Alphabet& other) const noexcept {
        return std::all_of(other.letters_.begin(), other.letters_.end(),
                           [this](char c) { return contains(c); });
    }

    friend Alphabet unite(const Alphabet& x, const Alphabet& y) { return Alphabet(x.letters_ + y.letters_); }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    friend bool operator==(const Alphabet& x, const Alphabet& y) noexcept { return x.letters_ == y.letters_; }
    friend std::strong_ordering operator<=>(const Alphabet& x, const Alphabet& y) noexcept {
        return x.letters_ <=> y.letters_;
    }

private:
    std::string letters_;
    std::array<std::int8_t, 256> index_{};
};

/// Complete deterministic automaton with states 0..n-1.
class Dfa {
public:
    Dfa() = default;

    /// All transitions initially lead to state 0; callers fill them in.
    Dfa(Alphabet alphabet, std::size_t states, State initial = 0)
        : alphabet_(std::move(alphabet)), states_(states), initial_(initial),
          delta_(states * alphabet_.size(), 0), final_(states, 0) {
        if (alphabet_.empty()) throw alphabet_error("alphabet must not be empty");
        if (states == 0) throw structure_error("a complete dfa needs at least one state");
        if (initial >= states) throw structure_error("initial state out of range");
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return states_; }
    std::size_t letter_count() const noexcept { return alphabet_.size(); }
    State initial() const noexcept { return initial_; }

    State next(State q, std::size_t letter) const { return delta_[q * alphabet_.size() + letter]; }
    State next(State q, char c) const { return next(q, alphabet_.index_of(c)); }
    bool is_final(State q) const { return final_[q] != 0; }

    void set(State q, std::size_t letter, State to) {
        check_state(q);
        check_state(to);
        delta_[q * alphabet_.size() + letter] = to;
    }
    void set(State q, char c, State to) { set(q, alphabet_.index_of(c), to); }
    void set_final(State q, bool value = true) {
        check_state(q);
        final_[q] = value ? 1 : 0;
    }
    void set_initial(State q) {
        check_state(q);
        initial_ = q;
    }

    /// State reached from `from` after reading `w`.
    State run(std::string_view w, State from) const {
        State q = from;
        for (char c : w) q = next(q, alphabet_.index_of(c));
        return q;
    }
    State run(std::string_view w) const { return run(w, initial_); }
    bool accepts(std::string_view w) const { return is_final(run(w)); }

    std::size_t final_count() const noexcept {
        return static_cast<std::size_t>(std::count(final_.begin(), final_.end(), 1));
    }

    const std::vector<State>& table() const noexcept { return delta_; }

    friend bool operator==(const Dfa&, const Dfa&) = default;
    friend auto operator<=>(const Dfa& x, const Dfa& y) {
        if (auto c = x.alphabet_ <=> y.alphabet_; c != 0) return c;
        if (auto c = x.states_ <=> y.states_; c != 0) return c;
        if (auto c = x.initial_ <=> y.initial_; c != 0) return c;
        if (auto c = x.final_ <=> y.final_; c != 0) return c;
        return x.delta_ <=> y.delta_;
    }

private:
    void check_state(State q) const {
        if (q >= states_) throw structure_error("state " + std::to_string(q) + " out of range");
    }

    Alphabet alphabet_;
    std::size_t states_ = 0;
    State initial_ = 0;
    std::vector<State> delta_;
    std::vector<std::uint8_t> final_;
};

/// Nondeterministic automaton with a set of initial states. Epsilon edges are
/// only accepted when the instance was created with `allow_epsilon`.
class Nfa {
public:
    Nfa() = default;

    Nfa(Alphabet alphabet, std::size_t states, bool allow_epsilon = false)
        : alphabet_(std::move(alphabet)), states_(states), allow_epsilon_(allow_epsilon),
          edges_(states * alphabet_.size()), eps_(states), initial_(states, 0), final_(states, 0) {
        if (alphabet_.empty()) throw alphabet_error("alphabet must not be empty");
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return states_; }
    std::size_t letter_count() const noexcept { return alphabet_.size(); }
    bool allows_epsilon() const noexcept { return allow_epsilon_; }

    State add_state() {
        ++states_;
        edges_.resize(states_ * alphabet_.size());
        eps_.emplace_back();
        initial_.push_back(0);
        final_.push_back(0);
        return static_cast<State>(states_ - 1);
    }

    void add_edge(State from, std::size_t letter, State to) {
        check_state(from);
        check_state(to);
        auto& out = edges_[from * alphabet_.size() + letter];
        if (std::find(out.begin(), out.end(), to) == out.end()) out.push_back(to);
    }
    void add_edge(State from, char c, State to) { add_edge(from, alphabet_.index_of(c), to); }

    void add_epsilon(State from, State to) {
        if (!allow_epsilon_) throw structure_error("epsilon transitions are not enabled on this nfa");
        check_state(from);
        check_state(to);
        auto& out = eps_[from];
        if (std::find(out.begin(), out.end(), to) == out.end()) out.push_back(to);
    }

    void set_initial(State q, bool value = true) {
        check_state(q);
        initial_[q] = value ? 1 : 0;
    }
    void set_final(State q, bool value = true) {
        check_state(q);
        final_[q] = value ? 1 : 0;
    }

    bool is_initial(State q) const { return initial_[q] != 0; }
    bool is_final(State q) const { return final_[q] != 0; }
    const std::vector<State>& targets(State q, std::size_t letter) const {
        return edges_[q * alphabet_.size() + letter];
    }
    const std::vector<State>& epsilon_targets(State q) const { return eps_[q]; }

    bool has_epsilon_edges() const noexcept {
        return std::any_of(eps_.begin(), eps_.end(), [](const auto& v) { return !v.empty(); });
    }

    /// Direct simulation; used as an independent check on determinization.
    bool accepts(std::string_view w) const {
        std::vector<std::uint8_t> cur(states_, 0);
        for (State q = 0; q < states_; ++q) cur[q] = initial_[q];
        close(cur);
        for (char c : w) {
            std::size_t a = alphabet_.index_of(c);
            std::vector<std::uint8_t> nxt(states_, 0);
            for (State q = 0; q < states_; ++q)
                if (cur[q])
                    for (State t : targets(q, a)) nxt[t] = 1;
            close(nxt);
            cur.swap(nxt);
        }
        for (State q = 0; q < states_; ++q)
            if (cur[q] && final_[q]) return true;
        return false;
    }

    /// Build an nfa (without epsilon edges) that mirrors a dfa.
    static Nfa from_dfa(const Dfa& d, bool allow_epsilon = false) {
        Nfa n(d.alphabet(), d.size(), allow_epsilon);
        for (State q = 0; q < d.size(); ++q) {
            for (std::size_t a = 0; a < d.letter_count(); ++a) n.add_edge(q, a, d.next(q, a));
            n.set_final(q, d.is_final(q));
        }
        n.set_initial(d.initial());
        return n;
    }

private:
    void check_state(State q) const {
        if (q >= states_) throw structure_error("state " + std::to_string(q) + " out of range");
    }

    void close(std::vector<std::uint8_t>& set) const {
        std::vector<State> stack;
        for (State q = 0; q < states_; ++q)
            if (set[q]) stack.push_back(q);
        while (!stack.empty()) {
            State q = stack.back();
            stack.pop_back();
            for (State t : eps_[q])
                if (!set[t]) {
                    set[t] = 1;
                    stack.push_back(t);
                }
        }
    }

    Alphabet alphabet_;
    std::size_t states_ = 0;
    bool allow_epsilon_ = false;
    std::vector<std::vector<State>> edges_;
    std::vector<std::vector<State>> eps_;
    std::vector<std::uint8_t> initial_;
    std::vector<std::uint8_t> final_;
};

} // namespace qlang

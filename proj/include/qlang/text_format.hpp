#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "automaton.hpp"
#include "language.hpp"

// Line-oriented automaton text format:
//
//   # comment
//   alphabet: a b c
//   states: 3
//   initial: 0            (nfa: "initials: 0 2")
//   final: 0 1
//   0 a 1                 (one line per transition; "~" is epsilon, nfa only)
//
// A dfa file must list exactly one transition for every (state, letter).

namespace qlang {

class format_error : public error {
public:
    format_error(const std::string& what, std::size_t line)
        : error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

inline State parse_state(const std::string& tok, std::size_t states, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw format_error("expected a state number, got '" + tok + "'", line);
    unsigned long v = 0;
    try {
        v = std::stoul(tok);
    } catch (const std::exception&) {
        throw format_error("state number '" + tok + "' is too large", line);
    }
    if (v >= states) throw format_error("state " + tok + " out of range (states: " + std::to_string(states) + ")", line);
    return static_cast<State>(v);
}

struct ParsedAutomaton {
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> states;
    std::vector<State> initials;
    bool plural_initials = false;
    bool has_initial = false;
    std::vector<State> finals;
    bool has_final = false;
    struct Edge {
        State from;
        char letter; // '~' for epsilon
        State to;
        std::size_t line;
    };
    std::vector<Edge> edges;
};

inline ParsedAutomaton parse_automaton_text(std::string_view text) {
    ParsedAutomaton p;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto words = split_words(line);
        if (words.empty()) {
            if (eol == text.size()) break;
            continue;
        }

        auto colon = line.find(':');
        if (colon != std::string_view::npos) {
            std::string key(line.substr(0, colon));
            key.erase(0, key.find_first_not_of(" \t"));
            key.erase(key.find_last_not_of(" \t\r") + 1);
            auto values = split_words(line.substr(colon + 1));
            auto need_states = [&] {
                if (!p.states) throw format_error("'" + key + "' must come after 'states:'", line_no);
            };
            if (key == "alphabet") {
                if (p.alphabet) throw format_error("duplicate 'alphabet:'", line_no);
                std::string letters;
                for (const auto& v : values) {
                    if (v.size() != 1 || !is_valid_letter(v[0]))
                        throw format_error("invalid letter '" + v + "'", line_no);
                    if (letters.find(v[0]) != std::string::npos)
                        throw format_error("letter '" + v + "' listed twice", line_no);
                    letters += v;
                }
                if (letters.empty()) throw format_error("alphabet must not be empty", line_no);
                p.alphabet = Alphabet(letters);
            } else if (key == "states") {
                if (p.states) throw format_error("duplicate 'states:'", line_no);
                if (values.size() != 1) throw format_error("'states:' takes one number", line_no);
                if (values[0].find_first_not_of("0123456789") != std::string::npos)
                    throw format_error("invalid state count '" + values[0] + "'", line_no);
                p.states = std::stoul(values[0]);
            } else if (key == "initial" || key == "initials") {
                need_states();
                if (p.has_initial) throw format_error("duplicate initial state declaration", line_no);
                p.has_initial = true;
                p.plural_initials = key == "initials";
                if (!p.plural_initials && values.size() != 1)
                    throw format_error("'initial:' takes exactly one state (use 'initials:' for an nfa)", line_no);
                for (const auto& v : values) p.initials.push_back(parse_state(v, *p.states, line_no));
            } else if (key == "final" || key == "finals") {
                need_states();
                if (p.has_final) throw format_error("duplicate 'final:'", line_no);
                p.has_final = true;
                for (const auto& v : values) p.finals.push_back(parse_state(v, *p.states, line_no));
            } else {
                throw format_error("unknown key '" + key + "'", line_no);
            }
            continue;
        }

        if (!p.alphabet || !p.states) throw format_error("transition before 'alphabet:' and 'states:'", line_no);
        if (words.size() != 3) throw format_error("expected 'FROM LETTER TO'", line_no);
        if (words[1].size() != 1) throw format_error("letter must be a single character", line_no);
        char c = words[1][0];
        if (c != '~' && !p.alphabet->contains(c))
            throw format_error(std::string("letter '") + c + "' is not in the alphabet", line_no);
        p.edges.push_back({parse_state(words[0], *p.states, line_no), c, parse_state(words[2], *p.states, line_no), line_no});
        if (eol == text.size()) break;
    }
    if (!p.alphabet) throw format_error("missing 'alphabet:'", 0);
    if (!p.states) throw format_error("missing 'states:'", 0);
    if (!p.has_initial) throw format_error("missing 'initial:'", 0);
    return p;
}

} // namespace detail

inline bool looks_like_nfa(std::string_view text) {
    auto p = detail::parse_automaton_text(text);
    if (p.plural_initials) return true;
    for (const auto& e : p.edges)
        if (e.letter == '~') return true;
    return false;
}

inline Dfa parse_dfa(std::string_view text) {
    auto p = detail::parse_automaton_text(text);
    if (p.plural_initials) throw format_error("'initials:' is only valid for an nfa", 0);
    if (*p.states == 0) throw format_error("a dfa needs at least one state", 0);
    Dfa d(*p.alphabet, *p.states, p.initials.front());
    const std::size_t k = p.alphabet->size();
    std::vector<std::uint8_t> seen(*p.states * k, 0);
    for (const auto& e : p.edges) {
        if (e.letter == '~') throw format_error("epsilon transition in a dfa", e.line);
        std::size_t a = p.alphabet->index_of(e.letter);
        auto& s = seen[e.from * k + a];
        if (s) throw format_error("second transition for state " + std::to_string(e.from) + " on '" + e.letter + "'", e.line);
        s = 1;
        d.set(e.from, a, e.to);
    }
    for (State q = 0; q < *p.states; ++q)
        for (std::size_t a = 0; a < k; ++a)
            if (!seen[q * k + a])
                throw format_error("incomplete dfa: no transition for state " + std::to_string(q) + " on '" +
                                       (*p.alphabet)[a] + "'",
                                   0);
    for (State q : p.finals) d.set_final(q);
    return d;
}

inline Nfa parse_nfa(std::string_view text) {
    auto p = detail::parse_automaton_text(text);
    bool eps = false;
    for (const auto& e : p.edges) eps = eps || e.letter == '~';
    Nfa n(*p.alphabet, *p.states, eps);
    for (const auto& e : p.edges) {
        if (e.letter == '~')
            n.add_epsilon(e.from, e.to);
        else
            n.add_edge(e.from, e.letter, e.to);
    }
    for (State q : p.initials) n.set_initial(q);
    for (State q : p.finals) n.set_final(q);
    return n;
}

/// Either format; nfa input is determinized.
inline Language parse_language(std::string_view text) {
    if (looks_like_nfa(text)) return Language(parse_nfa(text));
    return Language(parse_dfa(text));
}

inline std::string format_dfa(const Dfa& d) {
    std::ostringstream out;
    out << "alphabet:";
    for (char c : d.alphabet()) out << ' ' << c;
    out << "\nstates: " << d.size() << "\ninitial: " << d.initial() << "\nfinal:";
    for (State q = 0; q < d.size(); ++q)
        if (d.is_final(q)) out << ' ' << q;
    out << '\n';
    for (State q = 0; q < d.size(); ++q)
        for (std::size_t a = 0; a < d.letter_count(); ++a) out << q << ' ' << d.alphabet()[a] << ' ' << d.next(q, a) << '\n';
    return out.str();
}

inline std::string format_nfa(const Nfa& n) {
    std::ostringstream out;
    out << "alphabet:";
    for (char c : n.alphabet()) out << ' ' << c;
    out << "\nstates: " << n.size() << "\ninitials:";
    for (State q = 0; q < n.size(); ++q)
        if (n.is_initial(q)) out << ' ' << q;
    out << "\nfinal:";
    for (State q = 0; q < n.size(); ++q)
        if (n.is_final(q)) out << ' ' << q;
    out << '\n';
    for (State q = 0; q < n.size(); ++q) {
        for (std::size_t a = 0; a < n.letter_count(); ++a)
            for (State t : n.targets(q, a)) out << q << ' ' << n.alphabet()[a] << ' ' << t << '\n';
        for (State t : n.epsilon_targets(q)) out << q << " ~ " << t << '\n';
    }
    return out.str();
}

inline std::string format_language(const Language& l) { return format_dfa(l.dfa()); }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Language load_language(const std::string& path) { return parse_language(read_file(path)); }

inline void save_language(const Language& l, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw format_error("cannot write '" + path + "'", 0);
    out << format_language(l);
}

} // namespace qlang

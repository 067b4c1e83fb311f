#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "automaton.hpp"
#include "language.hpp"

namespace qlang {

/// Syntax error in a textual regular expression; `position` is the 1-based
/// character (not byte) offset of the offending token.
class regex_syntax_error : public error {
public:
    regex_syntax_error(const std::string& what, std::size_t position)
        : error("regex syntax error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Regular expression over the basic languages and union, product, star.
struct Regex {
    enum class Kind { empty_set, epsilon, letter, union_of, product, star };

    Kind kind = Kind::empty_set;
    char letter = 0;
    std::vector<Regex> operands;

    static Regex empty_set() { return {}; }
    static Regex epsilon() { return {Kind::epsilon, 0, {}}; }
    static Regex symbol(char c) { return {Kind::letter, c, {}}; }
    static Regex alt(Regex x, Regex y) { return binary(Kind::union_of, std::move(x), std::move(y)); }
    static Regex cat(Regex x, Regex y) { return binary(Kind::product, std::move(x), std::move(y)); }
    static Regex kleene(Regex x) {
        Regex r{Kind::star, 0, {}};
        r.operands.push_back(std::move(x));
        return r;
    }

    /// Letters occurring in the expression, as an alphabet string.
    std::string letters() const {
        std::string out;
        collect(out);
        return out;
    }

    friend bool operator==(const Regex&, const Regex&) = default;

private:
    static Regex binary(Kind k, Regex x, Regex y) {
        Regex r{k, 0, {}};
        r.operands.push_back(std::move(x));
        r.operands.push_back(std::move(y));
        return r;
    }
    void collect(std::string& out) const {
        if (kind == Kind::letter && out.find(letter) == std::string::npos) out.push_back(letter);
        for (const auto& o : operands) o.collect(out);
    }
};

namespace detail {

class RegexParser {
public:
    explicit RegexParser(std::string_view text) { tokenize(text); }

    Regex parse() {
        if (tokens_.empty() || tokens_.back().kind != Tok::end) throw regex_syntax_error("internal", 0);
        Regex r = parse_union();
        if (peek().kind != Tok::end) throw regex_syntax_error("unexpected '" + peek().text + "'", peek().pos);
        return r;
    }

private:
    enum class Tok { empty_set, epsilon, letter, bar, star, lparen, rparen, end };
    struct Token {
        Tok kind;
        char letter;
        std::string text;
        std::size_t pos;
    };

    void tokenize(std::string_view s) {
        std::size_t pos = 0;
        std::size_t i = 0;
        while (i < s.size()) {
            ++pos;
            auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
            unsigned char c = static_cast<unsigned char>(s[i]);
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                ++i;
                continue;
            }
            if (starts("∅")) { // ∅
                tokens_.push_back({Tok::empty_set, 0, "∅", pos});
                i += 3;
            } else if (starts("ε")) { // ε
                tokens_.push_back({Tok::epsilon, 0, "ε", pos});
                i += 2;
            } else if (starts("∪")) { // ∪
                tokens_.push_back({Tok::bar, 0, "∪", pos});
                i += 3;
            } else if (c >= 0x80) {
                std::size_t len = (c >= 0xf0) ? 4 : (c >= 0xe0) ? 3 : (c >= 0xc0) ? 2 : 1;
                throw regex_syntax_error("unsupported character '" + std::string(s.substr(i, len)) + "'", pos);
            } else {
                char ch = s[i++];
                switch (ch) {
                case '0': tokens_.push_back({Tok::empty_set, 0, "0", pos}); break;
                case '1': tokens_.push_back({Tok::epsilon, 0, "1", pos}); break;
                case '|':
                case '+': tokens_.push_back({Tok::bar, 0, std::string(1, ch), pos}); break;
                case '*': tokens_.push_back({Tok::star, 0, "*", pos}); break;
                case '(': tokens_.push_back({Tok::lparen, 0, "(", pos}); break;
                case ')': tokens_.push_back({Tok::rparen, 0, ")", pos}); break;
                default:
                    if (!is_valid_letter(ch))
                        throw regex_syntax_error(std::string("invalid letter '") + ch + "'", pos);
                    tokens_.push_back({Tok::letter, ch, std::string(1, ch), pos});
                }
            }
        }
        tokens_.push_back({Tok::end, 0, "end of input", pos + 1});
    }

    const Token& peek() const { return tokens_[at_]; }
    const Token& take() { return tokens_[at_++]; }

    Regex parse_union() {
        Regex r = parse_product();
        while (peek().kind == Tok::bar) {
            take();
            r = Regex::alt(std::move(r), parse_product());
        }
        return r;
    }

    bool starts_atom() const {
        auto k = peek().kind;
        return k == Tok::empty_set || k == Tok::epsilon || k == Tok::letter || k == Tok::lparen;
    }

    Regex parse_product() {
        if (!starts_atom()) throw regex_syntax_error("expected an expression before '" + peek().text + "'", peek().pos);
        Regex r = parse_starred();
        while (starts_atom()) r = Regex::cat(std::move(r), parse_starred());
        return r;
    }

    Regex parse_starred() {
        Regex r = parse_atom();
        while (peek().kind == Tok::star) {
            take();
            r = Regex::kleene(std::move(r));
        }
        return r;
    }

    Regex parse_atom() {
        const Token& t = take();
        switch (t.kind) {
        case Tok::empty_set: return Regex::empty_set();
        case Tok::epsilon: return Regex::epsilon();
        case Tok::letter: return Regex::symbol(t.letter);
        case Tok::lparen: {
            Regex r = parse_union();
            if (peek().kind != Tok::rparen) throw regex_syntax_error("expected ')'", peek().pos);
            take();
            return r;
        }
        default: throw regex_syntax_error("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t at_ = 0;
};

struct Fragment {
    State start;
    State accept;
};

/// Thompson construction: one start and one accepting state per fragment.
inline Fragment thompson(const Regex& r, Nfa& nfa) {
    switch (r.kind) {
    case Regex::Kind::empty_set: {
        State s = nfa.add_state(), f = nfa.add_state();
        return {s, f};
    }
    case Regex::Kind::epsilon: {
        State s = nfa.add_state(), f = nfa.add_state();
        nfa.add_epsilon(s, f);
        return {s, f};
    }
    case Regex::Kind::letter: {
        State s = nfa.add_state(), f = nfa.add_state();
        nfa.add_edge(s, nfa.alphabet().index_of(r.letter), f);
        return {s, f};
    }
    case Regex::Kind::union_of: {
        Fragment x = thompson(r.operands[0], nfa);
        Fragment y = thompson(r.operands[1], nfa);
        State s = nfa.add_state(), f = nfa.add_state();
        nfa.add_epsilon(s, x.start);
        nfa.add_epsilon(s, y.start);
        nfa.add_epsilon(x.accept, f);
        nfa.add_epsilon(y.accept, f);
        return {s, f};
    }
    case Regex::Kind::product: {
        Fragment x = thompson(r.operands[0], nfa);
        Fragment y = thompson(r.operands[1], nfa);
        nfa.add_epsilon(x.accept, y.start);
        return {x.start, y.accept};
    }
    case Regex::Kind::star: {
        Fragment x = thompson(r.operands[0], nfa);
        State s = nfa.add_state(), f = nfa.add_state();
        nfa.add_epsilon(s, x.start);
        nfa.add_epsilon(s, f);
        nfa.add_epsilon(x.accept, x.start);
        nfa.add_epsilon(x.accept, f);
        return {s, f};
    }
    }
    throw structure_error("unknown regex node");
}

inline void print(const Regex& r, int parent, std::string& out) {
    // precedence: union 0, product 1, star 2
    switch (r.kind) {
    case Regex::Kind::empty_set: out += "0"; return;
    case Regex::Kind::epsilon: out += "1"; return;
    case Regex::Kind::letter: out += r.letter; return;
    case Regex::Kind::union_of:
        if (parent > 0) out += '(';
        print(r.operands[0], 0, out);
        out += '|';
        print(r.operands[1], 0, out);
        if (parent > 0) out += ')';
        return;
    case Regex::Kind::product:
        if (parent > 1) out += '(';
        print(r.operands[0], 1, out);
        print(r.operands[1], 1, out);
        if (parent > 1) out += ')';
        return;
    case Regex::Kind::star:
        print(r.operands[0], 2, out);
        out += '*';
        return;
    }
}

} // namespace detail

/// Parse the textual syntax: `∅`/`0`, `ε`/`1`, letters, `∪`/`|`/`+` for
/// union, juxtaposition for product, postfix `*`, parentheses. Star binds
/// tighter than product, product tighter than union.
inline Regex parse_regex(std::string_view text) { return detail::RegexParser(text).parse(); }

/// ASCII rendering that parses back to the same tree.
inline std::string to_string(const Regex& r) {
    std::string out;
    detail::print(r, 0, out);
    return out;
}

inline Nfa regex_to_nfa(const Regex& r, const Alphabet& alphabet) {
    for (char c : r.letters())
        if (!alphabet.contains(c))
            throw alphabet_error(std::string("regex letter '") + c + "' is not in alphabet {" + alphabet.letters() + "}");
    Nfa nfa(alphabet, 0, true);
    auto frag = detail::thompson(r, nfa);
    nfa.set_initial(frag.start);
    nfa.set_final(frag.accept);
    return nfa;
}

inline Language regex_to_language(const Regex& r, const Alphabet& alphabet) {
    return Language(regex_to_nfa(r, alphabet));
}

inline Language regex_to_language(std::string_view text, const Alphabet& alphabet) {
    return regex_to_language(parse_regex(text), alphabet);
}

/// Alphabet defaults to the letters occurring in the expression (or {a}).
inline Language regex_to_language(std::string_view text) {
    Regex r = parse_regex(text);
    std::string letters = r.letters();
    return regex_to_language(r, Alphabet(letters.empty() ? "a" : letters));
}

} // namespace qlang

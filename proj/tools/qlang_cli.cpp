// qlang: command-line front end for the regular-language workbench.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <qlang/qlang.hpp>

namespace {

using namespace qlang;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

class usage_error : public error {
public:
    using error::error;
};

struct Input {
    std::string file;
    std::string regex;
};

struct Common {
    Input first;
    Input second;
    std::string alphabet;
    bool porcelain = false;
    std::string out;
    std::string out2;
};

void add_input(CLI::App* app, Common& c, bool binary) {
    app->add_option("--file", c.first.file, "automaton file (DFA/NFA text format)");
    app->add_option("--regex", c.first.regex, "regular expression");
    app->add_option("--alphabet", c.alphabet, "alphabet for --regex (default: letters used)");
    if (binary) {
        app->add_option("--file2", c.second.file, "second operand file");
        app->add_option("--regex2", c.second.regex, "second operand expression");
    }
}

std::optional<Language> load(const Input& in, const std::string& alphabet, const char* what) {
    if (!in.file.empty() && !in.regex.empty())
        throw usage_error(std::string("give either a file or a regex for the ") + what + " operand, not both");
    if (!in.file.empty()) return load_language(in.file);
    if (!in.regex.empty()) {
        if (alphabet.empty()) return regex_to_language(in.regex);
        return regex_to_language(in.regex, Alphabet(alphabet));
    }
    return std::nullopt;
}

Language require_input(const Input& in, const std::string& alphabet, const char* what) {
    auto l = load(in, alphabet, what);
    if (!l) throw usage_error(std::string("missing ") + what + " operand (use --file or --regex)");
    return *l;
}

/// Writes the automaton to `path`, or to stdout with a complexity comment.
void emit(const Language& l, const std::string& path, const std::string& label = "") {
    if (!path.empty()) {
        save_language(l, path);
        std::cout << (label.empty() ? "" : label + " ") << "kappa=" << l.complexity() << " file=" << path << '\n';
        return;
    }
    if (!label.empty()) std::cout << "# " << label << '\n';
    std::cout << "# kappa=" << l.complexity() << '\n' << format_language(l);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? std::string(sep) : "") + parts[i];
    return s;
}

/// "3..8", "4" or "2,3,5".
std::vector<std::size_t> parse_range(const std::string& text) {
    std::vector<std::size_t> out;
    if (text.empty()) return out;
    auto number = [&](const std::string& s) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != s.size() || s.empty()) throw usage_error("bad number '" + s + "' in range '" + text + "'");
        return static_cast<std::size_t>(v);
    };
    if (auto dots = text.find(".."); dots != std::string::npos) {
        std::size_t lo = number(text.substr(0, dots));
        std::size_t hi = number(text.substr(dots + 2));
        if (lo > hi) throw usage_error("empty range '" + text + "'");
        return range(lo, hi);
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        out.push_back(number(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run_info(const Common& c) {
    Language l = require_input(c.first, c.alphabet, "first");
    std::vector<std::string> closed;
    std::vector<std::string> duals;
    std::vector<std::string> ideals;
    for (auto k : all_closure_kinds) {
        if (is_closed(k, l)) {
            closed.emplace_back(to_string(k));
            duals.emplace_back(ideal_name(k));
        }
        if (is_ideal(k, l)) ideals.emplace_back(ideal_name(k));
    }
    const auto none = [](const std::vector<std::string>& v) { return v.empty() ? std::string("none") : join(v, ", "); };
    std::cout << "alphabet: " << l.alphabet().letters() << '\n'
              << "kappa=" << l.complexity() << '\n'
              << "accepting-quotients: " << accepting_quotient_count(l) << '\n'
              << "empty-quotient: " << (l.has_empty_quotient() ? "yes" : "no") << '\n'
              << "contains-epsilon: " << (l.contains("") ? "yes" : "no") << '\n'
              << "closed-classes: " << none(closed) << '\n'
              << "ideal-duals: " << none(duals) << '\n'
              << "ideal-kinds: " << none(ideals) << '\n';
    return exit_ok;
}

int run_closure(const Common& c, const std::string& kind_text) {
    auto kind = parse_closure_kind(kind_text);
    if (!kind) throw usage_error("unknown closure kind '" + kind_text + "' (prefix, suffix, factor, subword)");
    Language l = require_input(c.first, c.alphabet, "first");
    emit(closure(*kind, l), c.out, std::string(to_string(*kind)) + "-closure");
    return exit_ok;
}

int run_apply(const Common& c, const std::string& op, const std::string& word) {
    Language l = require_input(c.first, c.alphabet, "first");
    auto second = [&] { return require_input(c.second, c.alphabet, "second"); };
    std::optional<Language> result;
    if (op == "union") result = unite(l, second());
    else if (op == "intersection") result = intersect(l, second());
    else if (op == "difference") result = subtract(l, second());
    else if (op == "symdiff" || op == "symmetric-difference") result = boolean(BooleanOp::symmetric_difference, l, second());
    else if (op == "product") result = product(l, second());
    else if (op == "star") result = star(l);
    else if (op == "plus") result = plus(l);
    else if (op == "reverse") result = reverse(l);
    else if (op == "complement") result = complement(l);
    else if (op == "residual") result = residual(l, word);
    else throw usage_error("unknown operation '" + op + "'");
    emit(*result, c.out, op);
    return exit_ok;
}

int run_complexity(const Common& c) {
    Language l = require_input(c.first, c.alphabet, "first");
    std::cout << "kappa=" << l.complexity() << '\n';
    if (auto k = load(c.second, c.alphabet, "second")) std::cout << "kappa2=" << k->complexity() << '\n';
    return exit_ok;
}

int run_witness(const Common& c, const std::string& family_text, std::size_t n, std::size_t m) {
    auto family = parse_witness_family(family_text);
    if (!family) {
        std::vector<std::string> names;
        for (const auto& [f, name] : witness_family_names) names.emplace_back(name);
        throw usage_error("unknown family '" + family_text + "'; one of: " + join(names, ", "));
    }
    if (is_pair_family(*family) && m == 0) throw usage_error("pair family " + family_text + " needs --m");
    Witness w = make_witness(*family, n, m);
    if (w.second) {
        emit(w.first, c.out, "K");
        emit(*w.second, c.out2, "L");
    } else {
        emit(w.first, c.out, "L");
    }
    return exit_ok;
}

struct VerifyArgs {
    std::string cell;
    std::string n = "2..5";
    std::string m;
    std::optional<std::size_t> k;
    std::string mode = "tightness";
    std::size_t max_states = 3;
    std::uint64_t budget = 20000;
    std::uint64_t seed = 1;
    std::size_t letters = 4;
};

void print_report(const VerificationReport& r, bool porcelain) {
    if (!porcelain)
        std::cout << "cell " << to_string(r.cell) << "  bound " << formula_text(r.cell) << "  mode " << r.mode << '\n';
    std::cout << format_report(r);
    if (!porcelain) std::cout << "runtime " << r.seconds << "s\n";
}

int run_verify(const Common& c, const VerifyArgs& a) {
    BoundCell cell = parse_cell(a.cell);
    VerificationReport report;
    if (a.mode == "tightness") {
        Grid grid{a.m.empty() ? parse_range(a.n) : parse_range(a.m), parse_range(a.n), a.k};
        TightnessOptions opts;
        opts.search.budget = a.budget;
        opts.search.seed = a.seed;
        opts.max_search_letters = a.letters;
        report = verify_tightness(cell, grid, opts);
    } else if (a.mode == "universal") {
        UniversalOptions opts;
        report = verify_universal(cell, a.max_states, opts);
    } else {
        throw usage_error("unknown mode '" + a.mode + "' (tightness, universal)");
    }
    print_report(report, c.porcelain);
    return report.passed() ? exit_ok : exit_failed;
}

int run_search(const Common& c, const VerifyArgs& a, std::size_t n, std::size_t m) {
    BoundCell cell = parse_cell(a.cell);
    if (arity(cell) == 2 && m == 0) throw usage_error("binary cell needs --m");
    SearchOptions opts;
    opts.alphabet_size = a.letters;
    opts.budget = a.budget;
    opts.seed = a.seed;
    opts.k = a.k;
    auto hit = find_witness(cell, m, n, opts);
    ReportPoint p;
    p.m = m;
    p.n = n;
    p.samples = hit ? hit->tried : 0;
    if (hit) {
        p.k = hit->k;
        p.kappa = hit->kappa;
        p.bound = hit->bound;
        p.verdict = Verdict::tight;
        p.source = hit->exhaustive ? "search-exhaustive" : "search-random";
    } else {
        p.k = a.k;
        try {
            p.bound = bound_formula(cell, BoundArgs{m, n, a.k});
        } catch (const bound_error&) {
        }
        p.verdict = Verdict::inconclusive;
        p.source = "search";
    }
    std::cout << format_point(cell, p) << " seed=" << a.seed << '\n';
    if (hit) {
        if (hit->first) emit(*hit->first, c.out, "K");
        emit(hit->second, hit->first ? c.out2 : c.out, "L");
    }
    return exit_ok;
}

int run_kuratowski(const Common& c, const std::string& gen_text, const std::string& emit_dir) {
    auto gen = parse_generator(gen_text);
    if (!gen) throw usage_error("unknown generator '" + gen_text + "' (plus, star)");
    Language l = require_input(c.first, c.alphabet, "first");
    Orbit o = orbit(l, *gen);
    if (!emit_dir.empty()) std::filesystem::create_directories(emit_dir);
    std::size_t index = 0;
    for (const auto& e : o.entries) {
        std::string path;
        if (!emit_dir.empty()) {
            path = (std::filesystem::path(emit_dir) / ("orbit_" + std::to_string(index) + ".dfa")).string();
            save_language(e.language, path);
        }
        ++index;
        if (c.porcelain)
            std::cout << "ORBIT generator=" << to_string(*gen) << " expression=" << e.expression
                      << " kappa=" << e.complexity << (path.empty() ? "" : " file=" + path) << '\n';
        else
            std::cout << e.expression << "\tkappa=" << e.complexity << (path.empty() ? "" : "\t" + path) << '\n';
    }
    std::cout << (c.porcelain ? "ORBIT-SIZE " : "size ") << o.size() << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qlang: quotient complexity workbench for closed regular languages"};
    app.require_subcommand(1);
    Common c;

    auto* info = app.add_subcommand("info", "complexity and closure classes of a language");
    add_input(info, c, false);

    std::string kind;
    auto* clos = app.add_subcommand("closure", "downward closure under prefix/suffix/factor/subword");
    add_input(clos, c, false);
    clos->add_option("--kind", kind, "prefix, suffix, factor or subword")->required();
    clos->add_option("--out", c.out, "write the result to a file");

    std::string op;
    std::string word;
    auto* apply = app.add_subcommand("apply", "boolean, product, star, plus, reverse, complement, residual");
    add_input(apply, c, true);
    apply->add_option("--op", op, "operation")->required();
    apply->add_option("--word", word, "word for residual");
    apply->add_option("--out", c.out, "write the result to a file");

    auto* comp = app.add_subcommand("complexity", "print the quotient complexity");
    add_input(comp, c, true);

    std::string family;
    std::size_t n = 0;
    std::size_t m = 0;
    auto* wit = app.add_subcommand("witness", "emit a witness automaton (or pair)");
    wit->add_option("--family", family, "witness family")->required();
    wit->add_option("--n", n, "parameter n")->required();
    wit->add_option("--m", m, "parameter m (pair families)");
    wit->add_option("--out", c.out, "file for L (or K for pairs)");
    wit->add_option("--out2", c.out2, "file for L of a pair");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "check a bound cell over a parameter grid");
    ver->add_option("--cell", va.cell, "op:class[:variant], e.g. star:prefix")->required();
    ver->add_option("--n", va.n, "n values: 3..8, 4 or 2,3,5");
    ver->add_option("--m", va.m, "m values for binary cells (default: same as n)");
    ver->add_option("--k", va.k, "accepting quotients of K");
    ver->add_option("--mode", va.mode, "tightness or universal");
    ver->add_option("--max-states", va.max_states, "largest operand for universal mode");
    ver->add_option("--budget", va.budget, "search budget (operation evaluations)");
    ver->add_option("--seed", va.seed, "seed for randomized search");
    ver->add_option("--letters", va.letters, "largest alphabet tried by search");
    ver->add_flag("--porcelain", c.porcelain, "report lines only");

    std::size_t sn = 0;
    std::size_t sm = 0;
    VerifyArgs sa;
    auto* sea = app.add_subcommand("search", "look for operands attaining a bound");
    sea->add_option("--cell", sa.cell, "op:class[:variant]")->required();
    sea->add_option("--n", sn, "complexity of L")->required();
    sea->add_option("--m", sm, "complexity of K (binary cells)");
    sea->add_option("--k", sa.k, "accepting quotients of K");
    sea->add_option("--letters", sa.letters, "alphabet size")->default_val(2);
    sea->add_option("--budget", sa.budget, "operation evaluations");
    sea->add_option("--seed", sa.seed, "seed");
    sea->add_option("--out", c.out, "file for the (first) operand found");
    sea->add_option("--out2", c.out2, "file for the second operand");

    std::string generator = "star";
    std::string emit_dir;
    auto* kur = app.add_subcommand("kuratowski", "closure-complement orbit under plus or star");
    add_input(kur, c, false);
    kur->add_option("--generator", generator, "plus or star");
    kur->add_option("--emit", emit_dir, "directory receiving one file per orbit entry");
    kur->add_flag("--porcelain", c.porcelain, "machine-readable lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*info) return run_info(c);
        if (*clos) return run_closure(c, kind);
        if (*apply) return run_apply(c, op, word);
        if (*comp) return run_complexity(c);
        if (*wit) return run_witness(c, family, n, m);
        if (*ver) return run_verify(c, va);
        if (*sea) return run_search(c, sa, sn, sm);
        if (*kur) return run_kuratowski(c, generator, emit_dir);
    } catch (const std::exception& e) {
        std::cerr << "qlang: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

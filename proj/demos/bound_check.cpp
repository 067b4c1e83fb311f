// Checks a few bound cells against their witnesses and against every small
// class member, printing the harness report lines.
#include <iostream>

#include <qlang/qlang.hpp>

using namespace qlang;

int main() {
    for (const char* c : {"star:prefix", "product:subword", "closure-factor"}) {
        auto r = verify_tightness(parse_cell(c), Grid{range(2, 5), range(3, 6), std::nullopt});
        std::cout << formula_text(r.cell) << '\n' << format_report(r) << '\n';
    }

    auto u = verify_universal(parse_cell("reversal:suffix"), 4);
    std::cout << format_report(u) << '\n';

    // no generator exists here, so the harness searches
    SearchOptions opts;
    opts.alphabet_size = 3;
    if (auto hit = find_witness(parse_cell("reversal:suffix"), 0, 3, opts))
        std::cout << "reversal of a suffix-closed language with 3 quotients reaches " << hit->kappa << ":\n"
                  << format_language(hit->second);

    // the prefix product cell prints a NOTE about the table value
    auto p = verify_tightness(parse_cell("product:prefix"), Grid{{3}, {4}, std::nullopt});
    std::cout << '\n' << format_report(p);
}

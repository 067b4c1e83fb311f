// Walks one language through the four closures, its ideals and its orbit.
#include <iostream>

#include <qlang/qlang.hpp>

using namespace qlang;

int main(int argc, char** argv) {
    const std::string re = argc > 1 ? argv[1] : "(a|baa)*";
    const Language l = regex_to_language(re, Alphabet("ab"));
    std::cout << "L = " << re << "  kappa=" << l.complexity() << '\n';

    for (auto kind : all_closure_kinds) {
        Language c = closure(kind, l);
        std::cout << "  " << to_string(kind) << "-closure  kappa=" << c.complexity()
                  << (c == l ? "  (L is closed)" : "") << '\n';
    }

    const Language co = complement(l);
    for (auto kind : all_closure_kinds)
        if (is_ideal(kind, co)) std::cout << "  complement is a " << ideal_name(kind) << " ideal\n";

    for (auto g : {Generator::plus, Generator::star}) {
        Orbit o = orbit(l, g);
        std::cout << to_string(g) << " orbit, " << o.size() << " languages\n";
        for (const auto& e : o.entries) std::cout << "  " << e.expression << "  kappa=" << e.complexity << '\n';
    }

    std::cout << "\nsuffix closure of fig1(4):\n" << format_language(closure(ClosureKind::suffix, witness::fig1(4)));
}

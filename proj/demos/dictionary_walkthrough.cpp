// Walks the worked example end to end: a K3-type ternary form over Q(sqrt 2),
// its corestricted transcendental lattice, the corestriction Brauer class,
// and the Kuga-Satake summary.

#include <iostream>

#include "k3rm/dictionary.hpp"

using namespace k3rm;

int main() {
    auto K = NumberField::make(QPoly({Rat(-2), Rat(0), Rat(1)}));
    auto a = K.gen();
    auto u = K.sub(a, K.one()); // sqrt2 - 1
    auto q = diagonal_form(K, {u, u, K.from_rational(Rat(-1))});

    std::cout << "field: " << K.minpoly().str() << ", disc " << K.disc_order() << "\n";
    std::cout << "form: <a-1, a-1, -1>\n";

    auto sigs = signatures(q);
    std::cout << "signatures:";
    for (auto& s : sigs) std::cout << " (" << s.first << "," << s.second << ")";
    std::cout << "\nk3 type: " << (is_k3_type(q) ? "yes" : "no") << "\n\n";

    auto rep = k3_to_fourfold(K, q);
    std::cout << "corestricted gram (" << rep.t.gram.size() << " x " << rep.t.gram.size() << "):\n";
    for (const auto& row : rep.t.gram) {
        for (const auto& x : row) std::cout << "  " << x;
        std::cout << "\n";
    }
    std::cout << "det " << rep.t.det << ", even " << (rep.t.even ? "yes" : "no") << "\n";
    if (rep.t.embeddability) {
        auto sig = rep.t.embeddability->signature;
        std::cout << "signature (" << sig.first << "," << sig.second << "), verdict "
                  << embeddability_name(rep.t.embeddability->verdict) << "\n";
    }
    std::cout << "\ncorestriction class: " << rep.ks.cor_class.str() << "\n";
    std::cout << "kuga-satake dimension " << rep.ks.ks_dim << ", endomorphisms " << rep.ks.endo_label;
    if (rep.ks.endo_rep)
        std::cout << " = (" << rep.ks.endo_rep->first << "," << rep.ks.endo_rep->second << ")";
    std::cout << "\n";
    return 0;
}

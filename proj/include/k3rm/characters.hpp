#pragma once

// Formal character arithmetic for products of d copies of SL2: weights are
// integer vectors of length d, characters are sparse weight -> multiplicity
// maps, and decomposition is greedy peeling from the lexicographically
// largest weight. Everything is exact; no polynomials involved.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "k3rm/errors.hpp"
#include "k3rm/rational.hpp"

namespace k3rm {

using Weight = std::vector<int>;

struct Character {
    int d = 0;
    std::map<Weight, Int> weights;
};

inline Int char_dim(const Character& c) {
    Int n = 0;
    for (const auto& [w, m] : c.weights) {
        (void)w;
        n += m;
    }
    return n;
}

inline void char_insert(Character& c, const Weight& w, const Int& m) {
    if (m == 0) return;
    auto it = c.weights.find(w);
    if (it == c.weights.end()) {
        c.weights.emplace(w, m);
    } else {
        it->second += m;
        if (it->second == 0) c.weights.erase(it);
    }
}

inline Character char_add(const Character& a, const Character& b) {
    if (a.d != b.d) fail(errc::bad_input, "characters live over different products");
    Character out = a;
    for (const auto& [w, m] : b.weights) char_insert(out, w, m);
    return out;
}

inline Character char_scale(const Character& a, const Int& k) {
    Character out{a.d, {}};
    for (const auto& [w, m] : a.weights) char_insert(out, w, m * k);
    return out;
}

inline Character char_tensor(const Character& a, const Character& b) {
    if (a.d != b.d) fail(errc::bad_input, "characters live over different products");
    Character out{a.d, {}};
    for (const auto& [wa, ma] : a.weights)
        for (const auto& [wb, mb] : b.weights) {
            Weight w(static_cast<size_t>(a.d));
            for (size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
            char_insert(out, w, ma * mb);
        }
    return out;
}

// a genuine character is invariant under negating any single coordinate
inline bool is_weyl_symmetric(const Character& c) {
    for (const auto& [w, m] : c.weights) {
        if (m < 0) return false;
        for (size_t i = 0; i < w.size(); ++i) {
            Weight f = w;
            f[i] = -f[i];
            auto it = c.weights.find(f);
            if (it == c.weights.end() || it->second != m) return false;
        }
    }
    return true;
}

// W_{k_1,...,k_d}: coordinate i runs over k_i, k_i - 2, ..., -k_i
inline Character irr_char(const Weight& k) {
    if (k.empty() || k.size() > 6) fail(errc::bad_input, "factor count must be between 1 and 6");
    for (int v : k)
        if (v < 0) fail(errc::bad_input, "highest weight entries must be nonnegative");
    Character out{static_cast<int>(k.size()), {}};
    Weight w(k.size());
    // odometer over the weight strings of each factor
    std::vector<int> step(k.size(), 0);
    for (;;) {
        for (size_t i = 0; i < k.size(); ++i) w[i] = k[i] - 2 * step[i];
        char_insert(out, w, 1);
        size_t i = 0;
        while (i < k.size() && step[i] == k[i]) step[i++] = 0;
        if (i == k.size()) break;
        ++step[i];
    }
    return out;
}

namespace detail {

inline void require_character(const Character& c) {
    for (const auto& [w, m] : c.weights) {
        (void)w;
        if (m < 0) fail(errc::not_symmetric, "multiplicities must be nonnegative");
    }
    if (!is_weyl_symmetric(c)) fail(errc::not_symmetric, "character is not Weyl-symmetric");
}

inline Character pair_square(const Character& c, bool diagonal_with_repetition) {
    require_character(c);
    Character out{c.d, {}};
    for (auto it = c.weights.begin(); it != c.weights.end(); ++it) {
        Weight dbl(static_cast<size_t>(c.d));
        for (size_t i = 0; i < dbl.size(); ++i) dbl[i] = 2 * it->first[i];
        Int same = diagonal_with_repetition ? Int(it->second * (it->second + 1) / 2)
                                            : Int(it->second * (it->second - 1) / 2);
        char_insert(out, dbl, same);
        for (auto jt = std::next(it); jt != c.weights.end(); ++jt) {
            Weight w(static_cast<size_t>(c.d));
            for (size_t i = 0; i < w.size(); ++i) w[i] = it->first[i] + jt->first[i];
            char_insert(out, w, it->second * jt->second);
        }
    }
    return out;
}

} // namespace detail

inline Character sym2(const Character& c) { return detail::pair_square(c, true); }
inline Character wedge2(const Character& c) { return detail::pair_square(c, false); }

struct IrrDecomposition {
    std::map<Weight, Int> mults;
};

inline Character reconstruct(int d, const IrrDecomposition& dec) {
    Character out{d, {}};
    for (const auto& [k, m] : dec.mults) out = char_add(out, char_scale(irr_char(k), m));
    return out;
}

// greedy peeling from the lexicographically largest weight; for a character
// of an actual representation that weight is dominant at every step
inline IrrDecomposition decompose(const Character& c) {
    IrrDecomposition dec;
    Character rest = c;
    while (!rest.weights.empty()) {
        const auto& [top, mult] = *rest.weights.rbegin();
        if (mult < 0) fail(errc::not_decomposable, "negative multiplicity while peeling");
        for (int v : top)
            if (v < 0) fail(errc::not_decomposable, "leading weight is not dominant");
        Weight k = top;
        Int m = mult;
        rest = char_add(rest, char_scale(irr_char(k), -m));
        dec.mults[k] = m;
    }
    if (!(reconstruct(c.d, dec).weights == c.weights))
        fail(errc::bad_input, "internal: reconstruction mismatch");
    return dec;
}

inline Int trivial_multiplicity(const Character& c) {
    auto dec = decompose(c);
    auto it = dec.mults.find(Weight(static_cast<size_t>(c.d), 0));
    return it == dec.mults.end() ? Int(0) : it->second;
}

// Hodge bigrading read off the last coordinate, the Deligne-torus slot.
// values[i] is h^{m-i, i}: (h^{2,0}, h^{1,1}, h^{0,2}) at m = 2 and
// (h^{1,0}, h^{0,1}) at m = 1.
struct HodgeNumbers {
    int m = 2;
    std::vector<Int> values;

    const Int& h(int p) const { return values[static_cast<size_t>(m - p)]; }
};

inline HodgeNumbers hodge_numbers(const Character& c, int m) {
    if (m != 1 && m != 2) fail(errc::bad_input, "cohomological weight must be 1 or 2");
    HodgeNumbers out{m, std::vector<Int>(static_cast<size_t>(m) + 1, Int(0))};
    for (const auto& [w, mult] : c.weights) {
        int last = w.back();
        if (last < -m || last > m || (last - m) % 2 != 0)
            fail(errc::weight_out_of_range, "last coordinate outside the weight-" +
                                                std::to_string(m) + " bigrading");
        out.values[static_cast<size_t>((m - last) / 2)] += mult;
    }
    return out;
}

// representation-theoretic bookkeeping for the Kuga-Satake construction at
// degree d: H^1 is two copies of W_{1,...,1}, the squares of both one and two
// copies are decomposed, and the transcendental summands are listed
struct KsRepReport {
    int d = 0;
    Int dim_h1;
    IrrDecomposition sym2_two_copies, wedge2_two_copies;
    Int sym2_two_trivial, wedge2_two_trivial;
    Int sym2_one_trivial, wedge2_one_trivial;
    bool parity_ok = false;      // trivial in Sym^2 W iff d even, in /\^2 W iff d odd
    bool lemma_identity = false; // /\^2(W+W) = 3 /\^2 W + Sym^2 W
    std::vector<Weight> ts_summands;
    Int ts_dim;
    std::string grading_note;
};

inline KsRepReport ks_representation_report(int d) {
    if (d < 2 || d > 6) fail(errc::bad_input, "degree must be between 2 and 6");
    KsRepReport r;
    r.d = d;
    r.dim_h1 = pow_int(2, static_cast<unsigned>(d) + 1);
    Character W = irr_char(Weight(static_cast<size_t>(d), 1));
    Character two = char_add(W, W);
    Character s1 = sym2(W), w1 = wedge2(W);
    Character s2 = sym2(two), w2 = wedge2(two);
    r.sym2_two_copies = decompose(s2);
    r.wedge2_two_copies = decompose(w2);
    r.sym2_two_trivial = trivial_multiplicity(s2);
    r.wedge2_two_trivial = trivial_multiplicity(w2);
    r.sym2_one_trivial = trivial_multiplicity(s1);
    r.wedge2_one_trivial = trivial_multiplicity(w1);
    r.parity_ok = (r.sym2_one_trivial == (d % 2 == 0 ? 1 : 0)) &&
                  (r.wedge2_one_trivial == (d % 2 == 1 ? 1 : 0));
    r.lemma_identity = char_add(char_scale(w1, 3), s1).weights == w2.weights;
    for (int i = 0; i < d; ++i) {
        Weight k(static_cast<size_t>(d), 0);
        k[static_cast<size_t>(i)] = 2;
        r.ts_summands.push_back(std::move(k));
    }
    r.ts_dim = 0;
    for (const auto& k : r.ts_summands) r.ts_dim += char_dim(irr_char(k));
    r.grading_note = "bigrading reads the last factor; the Deligne torus acts in slot d";
    return r;
}

} // namespace k3rm

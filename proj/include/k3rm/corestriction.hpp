#pragma once

// Corestriction of quadratic spaces from K to Q on the power basis
// {a^j e_i}, plus the lattice invariants of the resulting rational Gram
// matrix: discriminant bookkeeping, discriminant groups, and the K3
// embeddability verdict.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3rm/quadratic_form.hpp"

namespace k3rm {

// basis vector a^j e_i sits at row/column i*d + j (i outer, j inner, 0-based)
inline size_t cor_index(int i, int j, int d) {
    return static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(j);
}

// Gram entry ((i,j),(i',j')) = Tr(a^{j+j'} * Q(e_i, e_{i'})); at d = 1 this is
// the identity functor, at n = 1 the plain d x d trace matrix of the entry.
inline Mat corestrict(const KQuadraticForm& q) {
    const NumberField& F = q.field;
    int n = q.rank(), d = F.degree();
    size_t nd = static_cast<size_t>(n) * static_cast<size_t>(d);
    Mat g(nd, std::vector<Rat>(nd, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int ip = 0; ip < n; ++ip) {
            const FieldElement& qe = q.gram[static_cast<size_t>(i)][static_cast<size_t>(ip)];
            for (int j = 0; j < d; ++j)
                for (int jp = 0; jp < d; ++jp) {
                    FieldElement v = F.mul(F.pow(F.gen(), static_cast<unsigned>(j + jp)), qe);
                    g[cor_index(i, j, d)][cor_index(ip, jp, d)] = F.trace(v);
                }
        }
    return g;
}

// phi(k) acting on the power basis: n diagonal blocks of the multiplication
// matrix of k; at n = 1, k = a this is the companion matrix of minpoly
inline Mat multiplication_operator(const NumberField& f, int n, const FieldElement& k) {
    int d = f.degree();
    Mat m = f.mult_matrix(k);
    size_t nd = static_cast<size_t>(n) * static_cast<size_t>(d);
    Mat out(nd, std::vector<Rat>(nd, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j)
            for (int jp = 0; jp < d; ++jp)
                out[cor_index(i, j, d)][cor_index(i, jp, d)] = m[static_cast<size_t>(j)][static_cast<size_t>(jp)];
    return out;
}

// |det G| against the discriminant lemma |disc_order|^n * |Norm(disc Q)|,
// with the main theorem's exponent-2 value reported alongside in the ternary
// quadratic-field case; the lemma flag is the authoritative one.
struct DiscCheck {
    Rat det_abs;
    Rat predicted_lemma;
    std::optional<Rat> predicted_thm_main;
    bool match_lemma;
};

inline DiscCheck disc_check(const KQuadraticForm& q, const Mat& g) {
    const NumberField& F = q.field;
    int n = q.rank(), d = F.degree();
    DiscCheck r;
    r.det_abs = abs_rat(det_rat(g));
    Rat disc_o(F.disc_order());
    Rat norm_disc = abs_rat(F.norm(disc_form(q)));
    r.predicted_lemma = pow_rat(abs_rat(disc_o), static_cast<unsigned>(n)) * norm_disc;
    if (n == 3 && d == 2) r.predicted_thm_main = pow_rat(abs_rat(disc_o), 2) * norm_disc;
    r.match_lemma = r.det_abs == r.predicted_lemma;
    return r;
}

inline bool is_integral(const Mat& g) {
    for (const auto& row : g)
        for (const auto& e : row)
            if (!is_integer(e)) return false;
    return true;
}

inline bool is_even(const Mat& g) {
    if (!is_integral(g)) return false;
    for (size_t i = 0; i < g.size(); ++i)
        if (mod_floor(to_int(g[i][i]), 2) != 0) return false;
    return true;
}

inline IMat to_imat(const Mat& g) {
    IMat z(g.size());
    for (size_t i = 0; i < g.size(); ++i)
        for (const auto& e : g[i]) z[i].push_back(to_int(e));
    return z;
}

inline Mat to_mat(const IMat& z) {
    Mat g(z.size());
    for (size_t i = 0; i < z.size(); ++i)
        for (const auto& e : z[i]) g[i].push_back(Rat(e));
    return g;
}

// L*/L of an integral nondegenerate Gram matrix. Generators live in the
// original rational coordinates; values of the quadratic form are reduced
// into [0,2) (only meaningful when the lattice is even) and pairings into
// [0,1).
struct DiscriminantGroup {
    std::vector<Int> divisors;                  // elementary divisors > 1, each dividing the next
    std::vector<std::vector<Rat>> generators;   // one rational vector per divisor
    bool even = false;
    std::vector<Rat> q_values;                  // q(g) mod 2Z, present when even
    Mat pairings;                               // b(g_k, g_l) mod Z, all pairs
};

inline DiscriminantGroup discriminant_group(const Mat& g) {
    if (!is_integral(g)) fail(errc::not_integral, "gram matrix must be integral");
    IMat z = to_imat(g);
    auto snf = smith_normal_form(z);
    for (const auto& dv : snf.diag)
        if (dv == 0) fail(errc::degenerate, "gram matrix is singular");

    DiscriminantGroup out;
    out.even = is_even(g);
    size_t n = g.size();
    // columns of V scaled by 1/d_k generate the dual modulo the lattice
    for (size_t k = 0; k < n; ++k) {
        if (snf.diag[k] == 1) continue;
        out.divisors.push_back(snf.diag[k]);
        std::vector<Rat> gen(n);
        for (size_t i = 0; i < n; ++i) gen[i] = Rat(snf.v[i][k], snf.diag[k]);
        out.generators.push_back(std::move(gen));
    }

    auto pair_value = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        Rat v(0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v += x[i] * g[i][j] * y[j];
        return v;
    };
    auto reduce_mod = [](Rat v, int m) {
        Int q = num(v) / (den(v) * m);
        v -= Rat(q * m);
        while (v < 0) v += m;
        while (v >= m) v -= m;
        return v;
    };

    size_t t = out.divisors.size();
    out.pairings.assign(t, std::vector<Rat>(t, Rat(0)));
    for (size_t k = 0; k < t; ++k) {
        if (out.even) out.q_values.push_back(reduce_mod(pair_value(out.generators[k], out.generators[k]), 2));
        for (size_t l = 0; l < t; ++l)
            out.pairings[k][l] = reduce_mod(pair_value(out.generators[k], out.generators[l]), 1);
    }

    // group order must come out to |det| exactly
    Rat prod(1);
    for (const auto& dv : out.divisors) prod *= Rat(dv);
    if (prod != abs_rat(det_rat(g)))
        fail(errc::bad_input, "internal: discriminant group order mismatch");
    return out;
}

// ---- the K3 lattice ---------------------------------------------------------

// E8 Gram matrix in the standard simple-root numbering, negated
inline IMat e8_minus_gram() {
    const int c[8][8] = {
        {2, 0, -1, 0, 0, 0, 0, 0},
        {0, 2, 0, -1, 0, 0, 0, 0},
        {-1, 0, 2, -1, 0, 0, 0, 0},
        {0, -1, -1, 2, -1, 0, 0, 0},
        {0, 0, 0, -1, 2, -1, 0, 0},
        {0, 0, 0, 0, -1, 2, -1, 0},
        {0, 0, 0, 0, 0, -1, 2, -1},
        {0, 0, 0, 0, 0, 0, -1, 2},
    };
    IMat g(8, std::vector<Int>(8));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) g[static_cast<size_t>(i)][static_cast<size_t>(j)] = -c[i][j];
    return g;
}

inline IMat hyperbolic_u_gram() { return {{Int(0), Int(1)}, {Int(1), Int(0)}}; }

inline IMat direct_sum(const IMat& a, const IMat& b) {
    size_t n = a.size(), m = b.size();
    IMat g(n + m, std::vector<Int>(n + m, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g[i][j] = a[i][j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) g[n + i][n + j] = b[i][j];
    return g;
}

// E8(-1)^2 + U^3: rank 22, even, unimodular, signature (3, 19);
// validated once on first use
inline const IMat& k3_lattice_gram() {
    static const IMat g = [] {
        IMat m = direct_sum(e8_minus_gram(), e8_minus_gram());
        for (int k = 0; k < 3; ++k) m = direct_sum(m, hyperbolic_u_gram());
        if (m.size() != 22) fail(errc::bad_input, "internal: K3 lattice rank");
        if (abs_int(det_int(m)) != 1) fail(errc::bad_input, "internal: K3 lattice not unimodular");
        Mat q = to_mat(m);
        if (!is_even(q)) fail(errc::bad_input, "internal: K3 lattice not even");
        auto sig = signature_of_gram(q);
        if (sig != std::make_pair(3, 19)) fail(errc::bad_input, "internal: K3 lattice signature");
        return m;
    }();
    return g;
}

enum class Embeddability { embeds, cannot_embed, unknown };

inline std::string embeddability_name(Embeddability e) {
    switch (e) {
        case Embeddability::embeds: return "Embeds";
        case Embeddability::cannot_embed: return "CannotEmbed";
        default: return "Unknown";
    }
}

struct EmbeddabilityReport {
    Embeddability verdict;
    int rank = 0;
    int ell = 0; // minimal generator count of the discriminant group
    std::pair<int, int> signature{0, 0};
    std::vector<std::string> reasons;
};

// Primitive embeddability into the K3 lattice: necessary conditions
// (signature (2, rank-2), rank <= 21, rank + ell <= 22) plus the
// conservative sufficient rule rank <= 11; anything in between is Unknown.
inline EmbeddabilityReport k3_embeddability(const Mat& g) {
    if (!is_even(g)) fail(errc::not_even, "lattice must be integral and even");
    k3_lattice_gram();

    EmbeddabilityReport r;
    r.rank = static_cast<int>(g.size());
    r.ell = static_cast<int>(discriminant_group(g).divisors.size());
    r.signature = signature_of_gram(g);

    if (r.signature != std::make_pair(2, r.rank - 2))
        r.reasons.push_back("signature is not (2, rank-2)");
    if (r.rank > 21) r.reasons.push_back("rank exceeds 21");
    if (r.rank + r.ell > 22) r.reasons.push_back("rank plus discriminant generators exceeds 22");
    if (!r.reasons.empty()) {
        r.verdict = Embeddability::cannot_embed;
        return r;
    }
    if (r.rank <= 11) {
        r.verdict = Embeddability::embeds;
        r.reasons.push_back("rank at most 11 with K3 signature");
        return r;
    }
    r.verdict = Embeddability::unknown;
    r.reasons.push_back("between the implemented bounds");
    return r;
}

} // namespace k3rm

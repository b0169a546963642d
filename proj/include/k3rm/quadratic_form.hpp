#pragma once

// Symmetric bilinear forms over a NumberField: congruence diagonalization,
// discriminant, per-embedding signatures and the K3-type signature test.

#include <utility>
#include <vector>

#include "k3rm/number_field.hpp"

namespace k3rm {

using KMat = std::vector<std::vector<FieldElement>>;

struct KQuadraticForm {
    NumberField field;
    KMat gram;

    int rank() const { return static_cast<int>(gram.size()); }
};

inline KQuadraticForm make_form(const NumberField& f, KMat gram) {
    size_t n = gram.size();
    if (n < 1 || n > 6) fail(errc::bad_input, "form rank must be between 1 and 6");
    for (const auto& row : gram)
        if (row.size() != n) fail(errc::bad_input, "gram matrix must be square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!(gram[i][j] == gram[j][i])) fail(errc::not_symmetric, "gram matrix must be symmetric");
    return {f, std::move(gram)};
}

inline KQuadraticForm diagonal_form(const NumberField& f, const std::vector<FieldElement>& entries) {
    size_t n = entries.size();
    KMat g(n, std::vector<FieldElement>(n, f.zero()));
    for (size_t i = 0; i < n; ++i) g[i][i] = entries[i];
    return make_form(f, std::move(g));
}

// determinant over K by Gaussian elimination with exact field arithmetic
inline FieldElement det_form(const KQuadraticForm& q) {
    const NumberField& F = q.field;
    KMat a = q.gram;
    size_t n = a.size();
    FieldElement d = F.one();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && F.is_zero(a[p][c])) ++p;
        if (p == n) return F.zero();
        if (p != c) {
            std::swap(a[p], a[c]);
            d = F.neg(d);
        }
        d = F.mul(d, a[c][c]);
        for (size_t i = c + 1; i < n; ++i) {
            if (F.is_zero(a[i][c])) continue;
            FieldElement f = F.div(a[i][c], a[c][c]);
            for (size_t j = c; j < n; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[c][j]));
        }
    }
    return d;
}

inline FieldElement disc_form(const KQuadraticForm& q) { return det_form(q); }

// diag and the congruence S behind it: S^T * gram * S = diag(entries)
struct DiagonalizeResult {
    std::vector<FieldElement> diag;
    KMat transform; // columns are the new basis vectors in the old coordinates
};

// Symmetric Gaussian elimination over K. A zero pivot is first repaired by
// swapping in a later basis vector with a nonzero diagonal entry; when the
// whole trailing diagonal vanishes, the first nonzero off-diagonal entry
// (row-major) gives the v_i <- v_i + v_j substitution, whose new diagonal
// value 2*gram[i][j] cannot vanish in characteristic zero.
inline DiagonalizeResult diagonalize(const KQuadraticForm& q) {
    const NumberField& F = q.field;
    size_t n = q.gram.size();
    KMat a = q.gram;
    KMat s(n, std::vector<FieldElement>(n, F.zero()));
    for (size_t i = 0; i < n; ++i) s[i][i] = F.one();

    // v_dst <- v_dst + f * v_src
    auto add_basis = [&](size_t dst, size_t src, const FieldElement& f) {
        for (size_t i = 0; i < n; ++i) {
            a[i][dst] = F.add(a[i][dst], F.mul(f, a[i][src]));
            s[i][dst] = F.add(s[i][dst], F.mul(f, s[i][src]));
        }
        for (size_t j = 0; j < n; ++j) a[dst][j] = F.add(a[dst][j], F.mul(f, a[src][j]));
    };
    auto swap_basis = [&](size_t i, size_t j) {
        for (size_t r = 0; r < n; ++r) {
            std::swap(a[r][i], a[r][j]);
            std::swap(s[r][i], s[r][j]);
        }
        std::swap(a[i], a[j]);
    };

    for (size_t t = 0; t < n; ++t) {
        if (F.is_zero(a[t][t])) {
            size_t pick = n;
            for (size_t j = t + 1; j < n && pick == n; ++j)
                if (!F.is_zero(a[j][j])) pick = j;
            if (pick != n) {
                swap_basis(t, pick);
            } else {
                size_t ri = n, rj = n;
                for (size_t i = t; i < n && ri == n; ++i)
                    for (size_t j = i + 1; j < n; ++j)
                        if (!F.is_zero(a[i][j])) {
                            ri = i;
                            rj = j;
                            break;
                        }
                if (ri == n) fail(errc::degenerate, "form is degenerate");
                add_basis(ri, rj, F.one()); // diagonal entry becomes 2*a[ri][rj]
                if (ri != t) swap_basis(t, ri);
            }
        }
        for (size_t j = t + 1; j < n; ++j) {
            if (F.is_zero(a[t][j])) continue;
            add_basis(j, t, F.neg(F.div(a[t][j], a[t][t])));
        }
    }

    DiagonalizeResult res;
    res.diag.reserve(n);
    for (size_t t = 0; t < n; ++t) res.diag.push_back(a[t][t]);
    res.transform = std::move(s);

    // det is preserved up to the square of det(transform)
    FieldElement prod = F.one();
    for (const auto& e : res.diag) prod = F.mul(prod, e);
    KQuadraticForm sq{F, res.transform};
    FieldElement ds = det_form(sq);
    FieldElement expect = F.mul(det_form(q), F.mul(ds, ds));
    if (!(prod == expect)) fail(errc::bad_input, "internal: diagonalization broke the determinant class");
    return res;
}

// (p_i, q_i) per embedding, i ascending; p_i + q_i = rank
using SignatureVector = std::vector<std::pair<int, int>>;

inline SignatureVector signatures(const KQuadraticForm& q) {
    auto diag = diagonalize(q).diag;
    const NumberField& F = q.field;
    SignatureVector out;
    for (int i = 1; i <= F.degree(); ++i) {
        int pos = 0, neg = 0;
        for (const auto& e : diag) {
            int s = F.sign_at(e, i);
            if (s > 0) ++pos;
            else if (s < 0) ++neg;
            else fail(errc::degenerate, "form is degenerate");
        }
        out.emplace_back(pos, neg);
    }
    return out;
}

// exactly one embedding sees (2, n-2) and every other sees (0, n)
inline bool is_k3_type(const KQuadraticForm& q) {
    int n = q.rank();
    int special = 0;
    for (const auto& [p, m] : signatures(q)) {
        if (p == 2 && m == n - 2) ++special;
        else if (!(p == 0 && m == n)) return false;
    }
    return special == 1;
}

struct ScaleResult {
    KQuadraticForm form;
    bool signatures_preserved;
};

inline ScaleResult scale_form(const KQuadraticForm& q, const FieldElement& lambda) {
    const NumberField& F = q.field;
    if (F.is_zero(lambda)) fail(errc::zero_input, "scaling by zero");
    KMat g = q.gram;
    for (auto& row : g)
        for (auto& e : row) e = F.mul(lambda, e);
    return {{F, std::move(g)}, F.is_totally_positive(lambda)};
}

// Signature of a rational symmetric matrix of any size, through the degree-1
// field; the rank cap of make_form applies to K-forms only, not here.
inline std::pair<int, int> signature_of_gram(const Mat& g) {
    NumberField Q = NumberField::rationals();
    size_t n = g.size();
    KMat kg(n, std::vector<FieldElement>(n, Q.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) kg[i][j] = Q.from_rational(g[i][j]);
    return signatures(KQuadraticForm{Q, std::move(kg)})[0];
}

} // namespace k3rm

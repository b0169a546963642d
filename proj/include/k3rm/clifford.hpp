#pragma once

// Clifford algebras of diagonal forms by explicit structure constants on the
// 2^n monomial basis, the even-part quaternion extractions for rank 3 and 4,
// and the quadric-splitting analyzer.
//
// Basis monomials are indexed by subset masks: bit i-1 set means e_i is a
// factor, written in increasing order. Products are folded one generator at
// a time: moving e_t from the right through a sorted word flips the sign once
// per factor larger than t, and a repeated factor contracts to d_t.

#include <array>
#include <utility>
#include <vector>

#include "k3rm/quaternion.hpp"

namespace k3rm {

struct CliffordAlgebra {
    NumberField field;
    std::vector<FieldElement> entries;

    struct Cell {
        FieldElement coeff;
        unsigned mask;
    };
    std::vector<std::vector<Cell>> table; // table[S][T]

    int n = 0;
    size_t dim() const { return size_t(1) << n; }
};

inline CliffordAlgebra make_clifford(const NumberField& f, const std::vector<FieldElement>& d) {
    if (d.empty() || d.size() > 6) fail(errc::bad_input, "clifford rank must be between 1 and 6");
    for (const auto& e : d)
        if (f.is_zero(e)) fail(errc::degenerate, "clifford form entries must be nonzero");
    CliffordAlgebra c{f, d, {}, static_cast<int>(d.size())};
    size_t N = c.dim();
    c.table.assign(N, std::vector<CliffordAlgebra::Cell>(N, {f.zero(), 0}));
    for (unsigned S = 0; S < N; ++S)
        for (unsigned T = 0; T < N; ++T) {
            FieldElement coeff = f.one();
            unsigned M = S;
            for (int t = 0; t < c.n; ++t) {
                if (!(T & (1u << t))) continue;
                int flips = 0;
                for (int s = t + 1; s < c.n; ++s)
                    if (M & (1u << s)) ++flips;
                if (flips % 2) coeff = f.neg(coeff);
                if (M & (1u << t)) coeff = f.mul(coeff, d[static_cast<size_t>(t)]);
                M ^= 1u << t;
            }
            c.table[S][T] = {std::move(coeff), M};
        }
    return c;
}

// elements as coordinate vectors over the 2^n monomial basis
using CliffordElement = std::vector<FieldElement>;

inline CliffordElement clifford_zero(const CliffordAlgebra& c) {
    return CliffordElement(c.dim(), c.field.zero());
}

inline CliffordElement clifford_basis(const CliffordAlgebra& c, unsigned mask) {
    auto x = clifford_zero(c);
    x[mask] = c.field.one();
    return x;
}

inline CliffordElement clifford_mul(const CliffordAlgebra& c, const CliffordElement& x,
                                    const CliffordElement& y) {
    const NumberField& f = c.field;
    auto out = clifford_zero(c);
    for (unsigned S = 0; S < c.dim(); ++S) {
        if (f.is_zero(x[S])) continue;
        for (unsigned T = 0; T < c.dim(); ++T) {
            if (f.is_zero(y[T])) continue;
            const auto& cell = c.table[S][T];
            out[cell.mask] = f.add(out[cell.mask], f.mul(f.mul(x[S], y[T]), cell.coeff));
        }
    }
    return out;
}

namespace detail {

// the diagonal of Q, diagonalizing first when the Gram matrix is not diagonal
inline std::vector<FieldElement> diagonal_entries(const KQuadraticForm& q) {
    const NumberField& f = q.field;
    bool diag = true;
    for (size_t i = 0; i < q.gram.size() && diag; ++i)
        for (size_t j = 0; j < q.gram.size(); ++j)
            if (i != j && !f.is_zero(q.gram[i][j])) {
                diag = false;
                break;
            }
    if (diag) {
        std::vector<FieldElement> d;
        for (size_t i = 0; i < q.gram.size(); ++i) d.push_back(q.gram[i][i]);
        return d;
    }
    return diagonalize(q).diag;
}

inline void check_nondegenerate(const NumberField& f, const std::vector<FieldElement>& d) {
    for (const auto& e : d)
        if (f.is_zero(e)) fail(errc::degenerate, "form must be nondegenerate");
}

// the cell for e_S * e_T must carry the expected coefficient and monomial
inline void expect_cell(const CliffordAlgebra& c, unsigned S, unsigned T,
                        const FieldElement& coeff, unsigned mask) {
    const auto& cell = c.table[S][T];
    if (!(cell.coeff == coeff) || cell.mask != mask)
        fail(errc::bad_input, "internal: structure constants disagree with the closed form");
}

} // namespace detail

// even Clifford algebra of a ternary form <a,b,c>: the quaternion algebra
// (-bc, -ac) on the generators i = e2 e3, j = e1 e3, re-derived from the
// structure-constant table on every call
inline QuaternionAlgebra even_clifford_ternary(const KQuadraticForm& q) {
    const NumberField& f = q.field;
    if (q.rank() != 3) fail(errc::bad_input, "even_clifford_ternary needs a rank-3 form");
    auto d = detail::diagonal_entries(q);
    detail::check_nondegenerate(f, d);
    const FieldElement &a = d[0], &b = d[1], &c = d[2];
    FieldElement alpha = f.neg(f.mul(b, c));
    FieldElement beta = f.neg(f.mul(a, c));
    auto table = make_clifford(f, d);
    // i^2 = -bc, j^2 = -ac, ij = c e1 e2 = -ji
    detail::expect_cell(table, 0b110, 0b110, alpha, 0);
    detail::expect_cell(table, 0b101, 0b101, beta, 0);
    detail::expect_cell(table, 0b110, 0b101, c, 0b011);
    detail::expect_cell(table, 0b101, 0b110, f.neg(c), 0b011);
    return make_quaternion(f, alpha, beta);
}

// even Clifford algebra of a quaternary rational form: center generated by
// z = e1 e2 e3 e4 with z^2 = d1 d2 d3 d4, and the quaternion (-d1 d2, -d1 d3)
// over Q(sqrt(z^2)) on the generators e1 e2, e1 e3
struct EvenCliffordQuaternary {
    Int center_radicand;
    NumberField center; // Q(sqrt(center_radicand))
    QuaternionAlgebra algebra;
};

inline EvenCliffordQuaternary even_clifford_quaternary(const KQuadraticForm& q) {
    const NumberField& f = q.field;
    if (f.degree() != 1) fail(errc::bad_input, "even_clifford_quaternary needs a rational form");
    if (q.rank() != 4) fail(errc::bad_input, "even_clifford_quaternary needs a rank-4 form");
    auto d = detail::diagonal_entries(q);
    detail::check_nondegenerate(f, d);
    Rat rad = Rat(1);
    for (const auto& e : d) rad *= e.coords[0];
    if (is_square_rat(rad)) fail(errc::split_center, "center splits: discriminant is a square");
    if (rad < 0) fail(errc::not_real_quadratic, "center is imaginary quadratic");

    auto table = make_clifford(f, d);
    auto fe = [&](const Rat& r) { return f.from_rational(r); };
    Rat d1 = d[0].coords[0], d2 = d[1].coords[0], d3 = d[2].coords[0];
    // z^2 = d1 d2 d3 d4; u = e1 e2 and v = e1 e3 anticommute and commute with z
    detail::expect_cell(table, 0b1111, 0b1111, fe(rad), 0);
    detail::expect_cell(table, 0b0011, 0b0011, fe(-d1 * d2), 0);
    detail::expect_cell(table, 0b0101, 0b0101, fe(-d1 * d3), 0);
    {
        const auto &uv = table.table[0b0011][0b0101], &vu = table.table[0b0101][0b0011];
        if (uv.mask != vu.mask || !(uv.coeff == f.neg(vu.coeff)))
            fail(errc::bad_input, "internal: even generators do not anticommute");
        const auto &uz = table.table[0b0011][0b1111], &zu = table.table[0b1111][0b0011];
        if (uz.mask != zu.mask || !(uz.coeff == zu.coeff))
            fail(errc::bad_input, "internal: center fails to commute");
        const auto &vz = table.table[0b0101][0b1111], &zv = table.table[0b1111][0b0101];
        if (vz.mask != zv.mask || !(vz.coeff == zv.coeff))
            fail(errc::bad_input, "internal: center fails to commute");
    }

    Int m = squarefree_radicand(rad);
    NumberField K = NumberField::make(QPoly({Rat(-m), Rat(0), Rat(1)}));
    auto B = make_quaternion(K, K.from_rational(-d1 * d2), K.from_rational(-d1 * d3));
    return {m, K, B};
}

// entrywise Galois conjugate of a form over a quadratic field: a -> -a - p
// for minpoly x^2 + p x + q
inline KQuadraticForm conjugate_form(const KQuadraticForm& q) {
    const NumberField& f = q.field;
    if (f.degree() != 2) fail(errc::not_quadratic_field, "conjugation needs a quadratic field");
    Rat p = f.minpoly().coeff(1);
    auto conj = [&](const FieldElement& e) {
        return f.element({e.coords[0] - p * e.coords[1], -e.coords[1]});
    };
    KMat g(q.gram.size(), std::vector<FieldElement>(q.gram.size(), f.zero()));
    for (size_t i = 0; i < q.gram.size(); ++i)
        for (size_t j = 0; j < q.gram.size(); ++j) g[i][j] = conj(q.gram[i][j]);
    return {f, std::move(g)};
}

// quadric-splitting analyzer: the two rulings of the quadric surface D = 0
// are conics over the quadratic center of the even Clifford algebra
struct SplitQuadricReport {
    DiagonalizeResult diagonalization;
    Int center_radicand;
    NumberField center;
    QuaternionAlgebra algebra;
    KQuadraticForm conic;
    KQuadraticForm conic_conjugate;
    // real_points[c][i]: conic c (0 the conic, 1 its conjugate) is isotropic
    // over the reals at embedding i+1
    std::array<std::array<bool, 2>, 2> real_points{};
    bool k3_type = false;
};

inline SplitQuadricReport split_quadric(const KQuadraticForm& q) {
    if (q.field.degree() != 1) fail(errc::bad_input, "split_quadric needs a rational form");
    if (q.rank() != 4) fail(errc::bad_input, "split_quadric needs a rank-4 form");
    auto dg = diagonalize(q);
    detail::check_nondegenerate(q.field, dg.diag);
    auto ec = even_clifford_quaternary(diagonal_form(q.field, dg.diag));
    auto C = trace_zero_form(ec.algebra);
    auto Cbar = conjugate_form(C);
    SplitQuadricReport r{std::move(dg), ec.center_radicand, ec.center,
                         ec.algebra,   C,                   Cbar};
    for (int ci = 0; ci < 2; ++ci) {
        auto sig = signatures(ci == 0 ? r.conic : r.conic_conjugate);
        for (int i = 0; i < 2; ++i)
            r.real_points[static_cast<size_t>(ci)][static_cast<size_t>(i)] =
                sig[static_cast<size_t>(i)].first != 0 && sig[static_cast<size_t>(i)].second != 0;
    }
    r.k3_type = is_k3_type(r.conic) || is_k3_type(r.conic_conjugate);
    return r;
}

} // namespace k3rm

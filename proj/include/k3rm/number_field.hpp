#pragma once

// Totally real number fields Q(a) of degree 1..6 in the power basis.
// NumberField is the arithmetic context; FieldElement is a plain coordinate
// vector and all operations go through the field object. Real embeddings are
// ordered by their roots ascending and addressed with 1-based indices.

#include <string>
#include <utility>
#include <vector>

#include "k3rm/linalg.hpp"
#include "k3rm/polynomial.hpp"

namespace k3rm {

struct FieldElement {
    std::vector<Rat> coords; // index j holds the coefficient of a^j

    bool operator==(const FieldElement& o) const { return coords == o.coords; }
};

class NumberField {
public:
    // Validates: monic, degree 1..6 (BadDegree), irreducible (Reducible),
    // exactly d real roots (NotTotallyReal). Roots are isolated to width
    // <= 1/1024 at construction.
    static NumberField make(const QPoly& minpoly) {
        int d = minpoly.degree();
        if (d < 1 || d > 6) fail(errc::bad_degree, "minpoly degree must be between 1 and 6");
        if (minpoly.lead() != 1) fail(errc::bad_input, "minpoly must be monic");
        if (!is_irreducible(minpoly)) fail(errc::reducible, "minpoly factors over the rationals");
        if (count_real_roots(minpoly) != d)
            fail(errc::not_totally_real, "minpoly does not have " + std::to_string(d) + " real roots");
        return NumberField(minpoly);
    }

    // Q itself, as the degree-1 field with minpoly x (generator a = 0)
    static NumberField rationals() { return make(QPoly({Rat(0), Rat(1)})); }

    int degree() const { return d_; }
    const QPoly& minpoly() const { return minpoly_; }
    const std::vector<QInterval>& roots() const { return roots_; }

    // i-th root interval (1-based), refined by `steps` extra bisections
    QInterval refine_root(int i, int steps) const {
        check_embedding(i);
        QInterval I = roots_[static_cast<size_t>(i - 1)];
        for (int s = 0; s < steps && !I.is_point(); ++s) I = bisect_root_interval(minpoly_, I);
        return I;
    }

    // ---- elements ----------------------------------------------------------

    FieldElement zero() const { return {std::vector<Rat>(static_cast<size_t>(d_), Rat(0))}; }
    FieldElement one() const { return from_rational(Rat(1)); }

    FieldElement from_rational(const Rat& r) const {
        auto e = zero();
        e.coords[0] = r;
        return e;
    }

    FieldElement gen() const {
        auto e = zero();
        if (d_ == 1) return e; // a = 0 in Q: x is the minimal polynomial of 0
        e.coords[1] = 1;
        return e;
    }

    FieldElement element(std::vector<Rat> coords) const {
        if (static_cast<int>(coords.size()) != d_)
            fail(errc::bad_input, "element needs exactly " + std::to_string(d_) + " coordinates");
        return {std::move(coords)};
    }

    bool is_zero(const FieldElement& x) const {
        for (const auto& c : x.coords)
            if (c != 0) return false;
        return true;
    }

    bool is_rational(const FieldElement& x) const {
        for (size_t j = 1; j < x.coords.size(); ++j)
            if (x.coords[j] != 0) return false;
        return true;
    }

    QPoly coordinate_poly(const FieldElement& x) const { return QPoly(x.coords); }

    FieldElement from_poly(const QPoly& p) const {
        QPoly r = p % minpoly_;
        std::vector<Rat> c(static_cast<size_t>(d_), Rat(0));
        for (size_t j = 0; j < c.size(); ++j) c[j] = r.coeff(j);
        return {std::move(c)};
    }

    FieldElement add(const FieldElement& x, const FieldElement& y) const {
        FieldElement r = x;
        for (size_t j = 0; j < r.coords.size(); ++j) r.coords[j] += y.coords[j];
        return r;
    }

    FieldElement sub(const FieldElement& x, const FieldElement& y) const {
        FieldElement r = x;
        for (size_t j = 0; j < r.coords.size(); ++j) r.coords[j] -= y.coords[j];
        return r;
    }

    FieldElement neg(const FieldElement& x) const {
        FieldElement r = x;
        for (auto& c : r.coords) c = -c;
        return r;
    }

    FieldElement mul(const FieldElement& x, const FieldElement& y) const {
        return from_poly(coordinate_poly(x) * coordinate_poly(y));
    }

    FieldElement scale(const Rat& s, const FieldElement& x) const {
        FieldElement r = x;
        for (auto& c : r.coords) c *= s;
        return r;
    }

    FieldElement invert(const FieldElement& x) const {
        if (is_zero(x)) fail(errc::division_by_zero, "inverse of zero");
        auto r = xgcd(coordinate_poly(x), minpoly_);
        // minpoly irreducible and x nonzero of lower degree: gcd is 1
        return from_poly(r.u);
    }

    FieldElement div(const FieldElement& x, const FieldElement& y) const { return mul(x, invert(y)); }

    FieldElement pow(const FieldElement& x, unsigned e) const {
        FieldElement acc = one(), base = x;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    std::string str(const FieldElement& x, const std::string& var = "a") const {
        return coordinate_poly(x).str(var);
    }

    // ---- trace, norm, discriminants ----------------------------------------

    // matrix of y -> x*y in the power basis; column j holds the coords of x*a^j
    Mat mult_matrix(const FieldElement& x) const {
        size_t n = static_cast<size_t>(d_);
        Mat m(n, std::vector<Rat>(n, Rat(0)));
        FieldElement col = x;
        for (size_t j = 0; j < n; ++j) {
            for (size_t i = 0; i < n; ++i) m[i][j] = col.coords[i];
            if (j + 1 < n) col = mul(col, gen());
        }
        return m;
    }

    Rat trace(const FieldElement& x) const {
        Mat m = mult_matrix(x);
        Rat t(0);
        for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
        return t;
    }

    // same value through Newton power sums of the minimal polynomial
    Rat trace_newton(const FieldElement& x) const {
        Rat t(0);
        for (size_t j = 0; j < x.coords.size(); ++j) t += x.coords[j] * power_sums_[j];
        return t;
    }

    Rat norm(const FieldElement& x) const { return det_rat(mult_matrix(x)); }

    // discriminant of the order Z[a]; requires an integral minimal polynomial
    Int disc_order() const {
        for (const auto& c : minpoly_.coeffs())
            if (!is_integer(c))
                fail(errc::not_integral, "minpoly is not integral, Z[a] is not an order");
        return to_int(discriminant(minpoly_));
    }

    // field discriminant, quadratic fields only: m when m = 1 mod 4, else 4m,
    // where m is the squarefree radicand
    Int disc_maximal() const {
        if (d_ != 2) fail(errc::not_quadratic, "disc_maximal needs a quadratic field");
        Int m = radicand();
        return mod_floor(m, 4) == 1 ? m : Int(4 * m);
    }

    // squarefree m > 1 with Q(a) = Q(sqrt m), quadratic fields only
    Int radicand() const {
        if (d_ != 2) fail(errc::not_quadratic, "radicand needs a quadratic field");
        Rat disc = minpoly_.coeff(1) * minpoly_.coeff(1) - 4 * minpoly_.coeff(0);
        return squarefree_radicand(disc);
    }

    // ---- real embeddings ----------------------------------------------------

    // sign of sigma_i(x), embeddings ordered by root ascending, i in 1..d
    int sign_at(const FieldElement& x, int i) const {
        check_embedding(i);
        if (is_zero(x)) return 0;
        QPoly g = coordinate_poly(x);
        QInterval I = roots_[static_cast<size_t>(i - 1)];
        for (int step = 0; step <= kRefineBudget; ++step) {
            QInterval v = I.is_point() ? QInterval{g.eval(I.lo), g.eval(I.lo)} : g.eval(I);
            if (!v.contains_zero()) return v.lo > 0 ? 1 : -1;
            if (v.lo == 0 && v.hi == 0) return 0; // exact: only at a point interval
            if (I.is_point()) break;
            I = bisect_root_interval(minpoly_, I);
        }
        // minpoly irreducible forces sigma_i(x) != 0 for x != 0
        fail(errc::bad_input, "interval refinement budget exhausted");
    }

    bool is_totally_positive(const FieldElement& x) const {
        for (int i = 1; i <= d_; ++i)
            if (sign_at(x, i) != 1) return false;
        return true;
    }

    // rational interval containing sigma_i(x)
    QInterval embedding_interval(const FieldElement& x, int i, int extra_bisections = 0) const {
        QInterval I = refine_root(i, extra_bisections);
        QPoly g = coordinate_poly(x);
        if (I.is_point()) {
            Rat v = g.eval(I.lo);
            return {v, v};
        }
        return g.eval(I);
    }

    bool operator==(const NumberField& o) const { return minpoly_ == o.minpoly_; }

private:
    explicit NumberField(const QPoly& minpoly)
        : minpoly_(minpoly), d_(minpoly.degree()), roots_(isolate_real_roots(minpoly)) {
        // Newton identities: p_0 = d, p_k = -k c_{d-k} - sum_{i<k} c_{d-i} p_{k-i}
        power_sums_.assign(static_cast<size_t>(d_), Rat(0));
        power_sums_[0] = d_;
        for (int k = 1; k < d_; ++k) {
            Rat p = -Rat(k) * minpoly_.coeff(static_cast<size_t>(d_ - k));
            for (int i = 1; i < k; ++i)
                p -= minpoly_.coeff(static_cast<size_t>(d_ - i)) * power_sums_[static_cast<size_t>(k - i)];
            power_sums_[static_cast<size_t>(k)] = p;
        }
    }

    void check_embedding(int i) const {
        if (i < 1 || i > d_) fail(errc::bad_input, "embedding index out of range");
    }

    static constexpr int kRefineBudget = 256;

    QPoly minpoly_;
    int d_;
    std::vector<QInterval> roots_;
    std::vector<Rat> power_sums_; // p_0 .. p_{d-1}
};

// The built-in totally real catalog, one field per degree pattern used in the
// tests and the command line tool. Every entry passes full validation.
inline std::vector<std::vector<Rat>> catalog_minpolys() {
    auto R = [](long long v) { return Rat(v); };
    return {
        {R(-2), R(0), R(1)},                                 // x^2 - 2
        {R(-5), R(0), R(1)},                                 // x^2 - 5
        {R(-1), R(-3), R(0), R(1)},                          // x^3 - 3x - 1
        {R(1), R(-2), R(-1), R(1)},                          // x^3 - x^2 - 2x + 1
        {R(1), R(4), R(-4), R(-1), R(1)},                    // x^4 - x^3 - 4x^2 + 4x + 1
        {R(1), R(3), R(-3), R(-4), R(1), R(1)},              // x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1
        {R(-1), R(3), R(6), R(-4), R(-5), R(1), R(1)},       // x^6 + x^5 - 5x^4 - 4x^3 + 6x^2 + 3x - 1
    };
}

inline std::vector<NumberField> catalog_fields() {
    std::vector<NumberField> out;
    for (const auto& c : catalog_minpolys()) out.push_back(NumberField::make(QPoly(c)));
    return out;
}

} // namespace k3rm

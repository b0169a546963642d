#pragma once

// Dense univariate polynomials over Q: arithmetic, gcd/xgcd, resultants,
// Sturm sequences, real root isolation with rational intervals, and a
// Kronecker-style irreducibility certificate for degree <= 6.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "k3rm/rational.hpp"

namespace k3rm {

// Closed interval [lo, hi] with rational endpoints. lo == hi denotes a point.
struct QInterval {
    Rat lo, hi;

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }

    QInterval operator*(const QInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }

    QInterval operator+(const Rat& r) const { return {lo + r, hi + r}; }
};

class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    QPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static QPoly constant(const Rat& r) { return QPoly({r}); }
    // x^k
    static QPoly monomial(size_t k, const Rat& coeff = Rat(1)) {
        std::vector<Rat> c(k + 1, Rat(0));
        c[k] = coeff;
        return QPoly(std::move(c));
    }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly operator-() const {
        std::vector<Rat> r(c_);
        for (auto& x : r) x = -x;
        return QPoly(std::move(r));
    }

    QPoly operator+(const QPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return QPoly(std::move(r));
    }

    QPoly operator-(const QPoly& o) const { return *this + (-o); }

    QPoly operator*(const QPoly& o) const {
        if (is_zero() || o.is_zero()) return QPoly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return QPoly(std::move(r));
    }

    QPoly operator*(const Rat& s) const {
        std::vector<Rat> r(c_);
        for (auto& x : r) x *= s;
        return QPoly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Horner over interval arithmetic; encloses the range of the polynomial on I
    QInterval eval(const QInterval& I) const {
        QInterval acc{Rat(0), Rat(0)};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * I + c_[i];
        return acc;
    }

    QPoly derivative() const {
        if (c_.size() <= 1) return QPoly();
        std::vector<Rat> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(Int(i));
        return QPoly(std::move(r));
    }

    // Euclidean division; divisor must be nonzero.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
        QPoly r = *this;
        std::vector<Rat> q(std::max<int>(degree() - d.degree() + 1, 0), Rat(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            size_t k = static_cast<size_t>(r.degree() - d.degree());
            Rat f = r.lead() / d.lead();
            q[k] = f;
            r = r - d * QPoly::monomial(k, f);
        }
        return {QPoly(std::move(q)), r};
    }

    QPoly operator/(const QPoly& d) const { return divmod(d).first; }
    QPoly operator%(const QPoly& d) const { return divmod(d).second; }

    bool divides(const QPoly& other) const { return other.divmod(*this).second.is_zero(); }

    QPoly monic() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / lead());
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
            else if (c_[i] < 0) out += "-";
            Rat a = abs_rat(c_[i]);
            bool show_coeff = (a != 1) || i == 0;
            if (show_coeff) out += rat_str(a);
            if (i > 0) {
                if (show_coeff) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_; // c_[i] is the coefficient of x^i
};

inline QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        QPoly r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

// g = gcd(a, b) together with u, v such that u*a + v*b = g
struct XgcdResult {
    QPoly g, u, v;
};

inline XgcdResult xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(Rat(1)), s1;
    QPoly t0, t1 = QPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        QPoly s2 = s0 - q * s1;
        QPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rat lc = r0.lead();
    return {r0 * (Rat(1) / lc), s0 * (Rat(1) / lc), t0 * (Rat(1) / lc)};
}

// Resultant via the subresultant-free recursion on remainders:
// res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r),  r = a mod b.
inline Rat resultant(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    QPoly f = a, g = b;
    Rat acc(1);
    while (true) {
        if (g.degree() == 0) {
            return acc * pow_rat(g.lead(), static_cast<unsigned>(f.degree()));
        }
        QPoly r = f % g;
        if (r.is_zero()) return Rat(0);
        int df = f.degree(), dg = g.degree(), dr = r.degree();
        acc *= pow_rat(g.lead(), static_cast<unsigned>(df - dr));
        if ((df % 2) && (dg % 2)) acc = -acc;
        f = std::move(g);
        g = std::move(r);
    }
}

// discriminant of a (nonconstant): (-1)^{d(d-1)/2} res(a, a') / lc(a)
inline Rat discriminant(const QPoly& a) {
    int d = a.degree();
    if (d < 1) fail(errc::bad_input, "discriminant of a constant");
    Rat r = resultant(a, a.derivative()) / a.lead();
    if ((d * (d - 1) / 2) % 2) r = -r;
    return r;
}

// ---- Sturm machinery ------------------------------------------------------

// p, p', then negated remainders until zero. Input need not be squarefree.
inline std::vector<QPoly> sturm_sequence(const QPoly& p) {
    std::vector<QPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    QPoly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        QPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

namespace detail {

inline int sturm_variations_at(const std::vector<QPoly>& seq, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& p : seq) {
        int s = sign_of(p.eval(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

// sign at +inf (dir=+1) or -inf (dir=-1)
inline int sign_at_infinity(const QPoly& p, int dir) {
    if (p.is_zero()) return 0;
    int s = sign_of(p.lead());
    if (dir < 0 && p.degree() % 2 != 0) s = -s;
    return s;
}

inline int sturm_variations_at_infinity(const std::vector<QPoly>& seq, int dir) {
    int var = 0, prev = 0;
    for (const auto& p : seq) {
        int s = sign_at_infinity(p, dir);
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

} // namespace detail

// number of distinct real roots in (a, b]
inline int sturm_count(const std::vector<QPoly>& seq, const Rat& a, const Rat& b) {
    return detail::sturm_variations_at(seq, a) - detail::sturm_variations_at(seq, b);
}

// number of distinct real roots
inline int count_real_roots(const QPoly& p) {
    if (p.degree() <= 0) return 0;
    auto seq = sturm_sequence(p);
    return detail::sturm_variations_at_infinity(seq, -1) -
           detail::sturm_variations_at_infinity(seq, +1);
}

// bound M with all real roots in (-M, M)
inline Rat root_bound(const QPoly& p) {
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs_rat(p.coeff(i)));
    return Rat(1) + m / abs_rat(p.lead());
}

// One bisection step on an isolating interval of p (non-point, endpoints not
// roots of p). Returns the half that keeps the sign change.
inline QInterval bisect_root_interval(const QPoly& p, const QInterval& I) {
    Rat mid = I.mid();
    int sm = sign_of(p.eval(mid));
    if (sm == 0) return {mid, mid};
    if (sm == sign_of(p.eval(I.lo))) return {mid, I.hi};
    return {I.lo, mid};
}

// primitive integer polynomial with the same rational roots; positive leading coefficient
inline std::vector<Int> primitive_integer_form(const QPoly& p) {
    Int l = 1;
    for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, den(c));
    std::vector<Int> z;
    z.reserve(p.coeffs().size());
    Int g = 0;
    for (const auto& c : p.coeffs()) {
        Int v = num(c) * (l / den(c));
        z.push_back(v);
        g = boost::multiprecision::gcd(g, abs_int(v));
    }
    if (g > 1)
        for (auto& v : z) v /= g;
    if (!z.empty() && z.back() < 0)
        for (auto& v : z) v = -v;
    return z;
}

namespace detail {

// distinct rational roots of a squarefree polynomial, via the rational root
// theorem on the primitive integer form
inline std::vector<Rat> rational_roots(const QPoly& p) {
    std::vector<Rat> roots;
    if (p.degree() < 1) return roots;
    auto z = primitive_integer_form(p);
    size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    if (low + 1 >= z.size()) return roots;
    auto pos_divisors = [](const Int& n) {
        std::vector<Int> ds{1};
        for (const auto& [q, e] : factor_int(n)) {
            std::vector<Int> next;
            Int qk = 1;
            for (unsigned k = 0; k <= e; ++k) {
                for (const auto& d : ds) next.push_back(d * qk);
                qk *= q;
            }
            ds = std::move(next);
        }
        return ds;
    };
    for (const auto& u : pos_divisors(z[low]))
        for (const auto& v : pos_divisors(z.back())) {
            Rat r(u, v);
            if (p.eval(r) == 0) roots.push_back(r);
            if (p.eval(-r) == 0) roots.push_back(-r);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace detail

// Isolating intervals for all distinct real roots, ascending and pairwise
// disjoint. A rational root yields the point interval [r, r]. Rational roots
// are deflated first, so every non-point interval [lo, hi] satisfies
// sign(q(lo)) != sign(q(hi)) for the rational-root-free squarefree part q,
// with neither endpoint a root; plain bisection refines it indefinitely.
inline std::vector<QInterval> isolate_real_roots(const QPoly& p_in, const Rat& max_width = Rat(1, 1024)) {
    if (p_in.degree() < 1) return {};
    QPoly p = p_in;
    QPoly g = gcd(p, p.derivative());
    if (g.degree() > 0) p = p / g;

    std::vector<QInterval> found;
    for (const auto& r : detail::rational_roots(p)) {
        found.push_back({r, r});
        p = p / QPoly({-r, Rat(1)});
    }

    if (p.degree() >= 1) {
        // p now has only irrational roots: it is nonzero at every rational
        // point, so sign tests and Sturm counts below are never ambiguous
        auto seq = sturm_sequence(p);
        Rat M = root_bound(p);
        struct Cell { Rat a, b; int count; };
        std::vector<Cell> stack;
        int total = sturm_count(seq, -M, M);
        if (total > 0) stack.push_back({-M, M, total});
        while (!stack.empty()) {
            Cell c = stack.back();
            stack.pop_back();
            if (c.count == 1) {
                QInterval I{c.a, c.b};
                while (I.width() > max_width) I = bisect_root_interval(p, I);
                found.push_back(I);
            } else {
                Rat mid = (c.a + c.b) / 2;
                int left = sturm_count(seq, c.a, mid);
                if (left > 0) stack.push_back({c.a, mid, left});
                if (c.count - left > 0) stack.push_back({mid, c.b, c.count - left});
            }
        }
        // keep point intervals (rational roots of the original) outside the
        // bisection intervals so the result is pairwise disjoint
        for (auto& I : found) {
            if (I.is_point()) continue;
            for (const auto& J : found) {
                if (!J.is_point()) continue;
                while (I.lo < J.lo && J.lo < I.hi) I = bisect_root_interval(p, I);
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const QInterval& x, const QInterval& y) { return x.lo < y.lo; });
    return found;
}

// ---- Irreducibility certificate --------------------------------------------

namespace detail {

inline std::vector<Int> signed_divisors(const Int& n) {
    std::vector<Int> ds{1};
    for (const auto& [p, e] : factor_int(n)) {
        std::vector<Int> next;
        Int pk = 1;
        for (unsigned k = 0; k <= e; ++k) {
            for (const auto& d : ds) next.push_back(d * pk);
            pk *= p;
        }
        ds = std::move(next);
    }
    size_t m = ds.size();
    for (size_t i = 0; i < m; ++i) ds.push_back(-ds[i]);
    std::sort(ds.begin(), ds.end());
    return ds;
}

} // namespace detail

// Kronecker certificate: search for a factor of degree 1..deg/2 by
// interpolating through divisor tuples of values at small integer points.
// Returns a nontrivial factor if one exists. Exact; intended for degree <= 6.
inline std::optional<QPoly> kronecker_factor(const QPoly& p_in) {
    QPoly p = p_in;
    int d = p.degree();
    if (d <= 1) return std::nullopt;

    // evaluation points 0, 1, -1, 2, -2, 3, ...
    auto point = [](int i) -> Rat {
        if (i == 0) return Rat(0);
        int k = (i + 1) / 2;
        return i % 2 ? Rat(k) : Rat(-k);
    };

    // a zero value at an integer point is already a linear factor
    for (int i = 0; i <= d / 2 + 1; ++i) {
        Rat x = point(i);
        if (p.eval(x) == 0) return QPoly({-x, Rat(1)});
    }

    for (int k = 1; k <= d / 2; ++k) {
        std::vector<Rat> xs;
        std::vector<std::vector<Int>> choices;
        for (int i = 0; i <= k; ++i) {
            Rat x = point(i);
            xs.push_back(x);
            // any integral factor value at x divides the integral form's value
            Int l = 1;
            for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, den(c));
            Rat v = p.eval(x) * Rat(l);
            choices.push_back(detail::signed_divisors(to_int(v)));
        }

        std::vector<size_t> idx(static_cast<size_t>(k) + 1, 0);
        while (true) {
            // Lagrange interpolation through (xs[i], choices[i][idx[i]])
            QPoly g;
            for (int i = 0; i <= k; ++i) {
                QPoly term = QPoly::constant(Rat(choices[i][idx[i]]));
                for (int j = 0; j <= k; ++j) {
                    if (j == i) continue;
                    term = term * QPoly({-xs[j], Rat(1)}) * QPoly::constant(Rat(1) / (xs[i] - xs[j]));
                }
                g = g + term;
            }
            if (g.degree() >= 1 && g.degree() < d && g.divides(p)) return g;

            size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < choices[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return std::nullopt;
}

inline bool is_irreducible(const QPoly& p) {
    if (p.degree() < 1) return false;
    if (p.degree() == 1) return true;
    return !kronecker_factor(p).has_value();
}

} // namespace k3rm

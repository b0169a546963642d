#pragma once

// Quaternion algebras over Q and over real quadratic fields: Hilbert symbols
// at all places, ramification sets, corestriction Brauer classes, minimal
// rational representatives, and the Kuga-Satake descriptor.
//
// The local machinery at finite places of K is restricted to quadratic
// fields. Split places embed into Q_p by lifting a square root of the
// radicand; inert and ramified odd places use the tame symbol in the residue
// field; the place above 2, when not split, is determined by the product
// formula over every other place.

#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "k3rm/quadratic_form.hpp"

namespace k3rm {

// ---- places of Q ------------------------------------------------------------

struct PlaceQ {
    bool infinite = false;
    Int p = 0;

    static PlaceQ infinity() { return {true, 0}; }
    static PlaceQ prime(const Int& p) { return {false, p}; }

    bool operator==(const PlaceQ& o) const { return infinite == o.infinite && p == o.p; }
};

// finite set of rational places; infinity ordered after all primes
struct BrauerClass {
    std::set<Int> primes;
    bool infinite = false;

    size_t size() const { return primes.size() + (infinite ? 1 : 0); }
    bool empty() const { return size() == 0; }
    bool operator==(const BrauerClass& o) const = default;

    std::string str() const {
        std::string s = "{";
        for (const auto& q : primes) {
            if (s.size() > 1) s += ", ";
            s += q.str();
        }
        if (infinite) {
            if (s.size() > 1) s += ", ";
            s += "inf";
        }
        return s + "}";
    }
};

// ---- Hilbert symbol over Q ----------------------------------------------------

// (a, b)_v by the classical closed forms: at infinity -1 iff both negative;
// at odd p through Legendre symbols of the unit parts; at 2 through the
// epsilon/omega square-class functionals.
inline int hilbert_q(const Rat& a, const Rat& b, const PlaceQ& v) {
    if (a == 0 || b == 0) fail(errc::zero_input, "hilbert symbol needs nonzero entries");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = v.p;
    if (!is_prime(p)) fail(errc::bad_input, "place must be a prime or inf");
    long alpha = val_p(a, p), beta = val_p(b, p);
    Rat u = unit_part(a, p), w = unit_part(b, p);
    if (p == 2) {
        long e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
        return e % 2 ? -1 : 1;
    }
    int s = 1;
    if ((alpha % 2) && (beta % 2) && legendre(Rat(-1), p) == -1) s = -s;
    if (beta % 2) s *= legendre(u, p);
    if (alpha % 2) s *= legendre(w, p);
    return s;
}

// candidate finite places where (a, b) can ramify: 2 and primes in a or b
inline std::set<Int> hilbert_candidate_primes(const Rat& a, const Rat& b) {
    std::set<Int> ps{Int(2)};
    for (const Rat* r : {&a, &b}) {
        for (const auto& [q, e] : factor_int(num(*r))) {
            (void)e;
            ps.insert(q);
        }
        for (const auto& [q, e] : factor_int(den(*r))) {
            (void)e;
            ps.insert(q);
        }
    }
    return ps;
}

inline BrauerClass ramification_q(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) fail(errc::zero_input, "quaternion algebra needs nonzero entries");
    BrauerClass c;
    for (const auto& p : hilbert_candidate_primes(a, b))
        if (hilbert_q(a, b, PlaceQ::prime(p)) == -1) c.primes.insert(p);
    c.infinite = hilbert_q(a, b, PlaceQ::infinity()) == -1;
    if (c.size() % 2) fail(errc::bad_input, "internal: ramification set has odd cardinality");
    return c;
}

// ---- quaternion algebras -------------------------------------------------------

// i^2 = alpha, j^2 = beta, ij = -ji over the base field (Q is degree 1)
struct QuaternionAlgebra {
    NumberField base;
    FieldElement alpha, beta;
};

inline QuaternionAlgebra make_quaternion(const NumberField& f, const FieldElement& alpha,
                                         const FieldElement& beta) {
    if (f.is_zero(alpha) || f.is_zero(beta))
        fail(errc::zero_input, "quaternion algebra needs nonzero entries");
    return {f, alpha, beta};
}

inline QuaternionAlgebra make_quaternion_q(const Rat& a, const Rat& b) {
    NumberField Q = NumberField::rationals();
    return make_quaternion(Q, Q.from_rational(a), Q.from_rational(b));
}

// reduced norm restricted to trace zero, in the fixed project convention
inline KQuadraticForm trace_zero_form(const QuaternionAlgebra& B) {
    const NumberField& F = B.base;
    return diagonal_form(F, {F.neg(B.alpha), F.neg(B.beta), F.mul(B.alpha, B.beta)});
}

inline BrauerClass ramification_q(const QuaternionAlgebra& B) {
    if (B.base.degree() != 1) fail(errc::bad_input, "ramification_q needs a rational algebra");
    return ramification_q(B.alpha.coords[0], B.beta.coords[0]);
}

// ---- places of a real quadratic field -------------------------------------------

enum class SplitTag { split1, split2, inert, ramified };

struct PlaceK {
    bool archimedean = false;
    int embedding = 0; // 1-based, when archimedean
    Int p = 0;
    SplitTag tag = SplitTag::inert;

    static PlaceK arch(int i) {
        PlaceK w;
        w.archimedean = true;
        w.embedding = i;
        return w;
    }
    static PlaceK finite(const Int& p, SplitTag t) {
        PlaceK w;
        w.p = p;
        w.tag = t;
        return w;
    }

    std::string str() const {
        if (archimedean) return "sigma_" + std::to_string(embedding);
        std::string t = tag == SplitTag::split1    ? "split1"
                        : tag == SplitTag::split2  ? "split2"
                        : tag == SplitTag::inert   ? "inert"
                                                   : "ramified";
        return p.str() + ":" + t;
    }
};

// writing K = Q(sqrt m): a = (-b + s*sqrt(m))/2 for minpoly x^2 + b x + c,
// where b^2 - 4c = s^2 m with m squarefree and s > 0 rational
struct SqrtBasis {
    Int m;
    Rat s;
    Rat b;

    // alpha = c0 + c1 a  ->  x + y sqrt(m)
    std::pair<Rat, Rat> coords(const FieldElement& e) const {
        return {e.coords[0] - e.coords[1] * b / 2, e.coords[1] * s / 2};
    }
};

inline SqrtBasis sqrt_basis(const NumberField& f) {
    if (f.degree() != 2) fail(errc::not_quadratic_field, "quadratic field required");
    Rat b = f.minpoly().coeff(1);
    Rat disc = b * b - 4 * f.minpoly().coeff(0);
    Int m = squarefree_radicand(disc);
    Rat q = disc / Rat(m); // a positive square by construction
    Rat s(isqrt(num(q)), isqrt(den(q)));
    return {m, s, b};
}

// how a rational prime behaves in the maximal order, read off the field
// discriminant D: odd p by the Legendre symbol of D, p = 2 by D mod 8
inline std::vector<PlaceK> places_above(const NumberField& f, const Int& p) {
    if (f.degree() != 2) fail(errc::not_quadratic_field, "quadratic field required");
    Int D = f.disc_maximal();
    int kind;
    if (p == 2) {
        if (mod_floor(D, 2) == 0) kind = 0;      // ramified
        else if (mod_floor(D, 8) == 1) kind = 1; // split
        else kind = -1;                          // inert (D = 5 mod 8)
    } else {
        kind = mod_floor(D, p) == 0 ? 0 : legendre(Rat(D), p);
    }
    if (kind == 1) return {PlaceK::finite(p, SplitTag::split1), PlaceK::finite(p, SplitTag::split2)};
    if (kind == -1) return {PlaceK::finite(p, SplitTag::inert)};
    return {PlaceK::finite(p, SplitTag::ramified)};
}

namespace detail {

// square root of n modulo odd prime p (n a residue), by Tonelli-Shanks
inline Int sqrt_mod_p(const Int& n0, const Int& p) {
    Int n = mod_floor(n0, p);
    if (n == 0) return 0;
    if (mod_floor(p, 4) == 3) return pow_mod(n, (p + 1) / 4, p);
    Int q = p - 1;
    unsigned s = 0;
    while (mod_floor(q, 2) == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (legendre(Rat(z), p) != -1) ++z;
    Int c = pow_mod(z, q, p);
    Int x = pow_mod(n, (q + 1) / 2, p);
    Int t = pow_mod(n, q, p);
    unsigned m = s;
    while (t != 1) {
        Int tt = t;
        unsigned i = 0;
        while (tt != 1) {
            tt = mod_floor(tt * tt, p);
            ++i;
        }
        Int b = pow_mod(c, pow_int(2, m - i - 1), p);
        x = mod_floor(x * b, p);
        c = mod_floor(b * b, p);
        t = mod_floor(t * c, p);
        m = i;
    }
    return x;
}

// lift of sqrt(n) from mod p to mod p^N (odd p, n a unit residue)
inline Int sqrt_mod_pk(const Int& n, const Int& p, unsigned N) {
    Int r = sqrt_mod_p(n, p);
    Int pk = p;
    unsigned k = 1;
    while (k < N) {
        unsigned k2 = std::min(2 * k, N);
        Int pk2 = pow_int(p, k2);
        // r' = r - (r^2 - n) / (2r) mod p^k2
        Int t = mod_floor(r * r - n, pk2);
        r = mod_floor(r - t * inv_mod(mod_floor(2 * r, pk2), pk2), pk2);
        pk = pk2;
        k = k2;
    }
    return r;
}

// lift of sqrt(n) in the 2-adics, n = 1 mod 8, to mod 2^N; root chosen = 1 mod 4
inline Int sqrt_mod_2k(const Int& n, unsigned N) {
    Int r = 1;
    unsigned k = 3; // 1^2 = n mod 8
    while (k < N + 1) {
        unsigned k2 = std::min(2 * k - 2, N + 1);
        Int pk2 = pow_int(2, k2);
        // r' = r - (r^2 - n)/2 * inv(r) * inv(2) is not available; use
        // r' = r - ((r^2 - n)/2) * inv_mod(r, 2^k2) then halve the defect:
        Int half = mod_floor((r * r - n) / 2, pk2);
        r = mod_floor(r - half * inv_mod(r, pk2), pk2);
        k = k2;
    }
    Int out = mod_floor(r, pow_int(2, N));
    if (mod_floor(out, 4) != 1) out = mod_floor(pow_int(2, N) - out, pow_int(2, N));
    return out;
}

// arithmetic in F_p[t]/(t^2 - m): elements x + y t
struct Fp2 {
    Int x, y;
};

inline Fp2 fp2_mul(const Fp2& a, const Fp2& b, const Int& m, const Int& p) {
    return {mod_floor(a.x * b.x + m * a.y * b.y, p), mod_floor(a.x * b.y + a.y * b.x, p)};
}

inline Fp2 fp2_pow(Fp2 a, Int e, const Int& m, const Int& p) {
    Fp2 r{1, 0};
    while (e > 0) {
        if (mod_floor(e, 2) == 1) r = fp2_mul(r, a, m, p);
        a = fp2_mul(a, a, m, p);
        e /= 2;
    }
    return r;
}

inline Fp2 fp2_inv(const Fp2& a, const Int& m, const Int& p) {
    // (x + y t)^-1 = (x - y t) / (x^2 - m y^2)
    Int nrm = mod_floor(a.x * a.x - m * a.y * a.y, p);
    Int inv = inv_mod(nrm, p);
    return {mod_floor(a.x * inv, p), mod_floor(-a.y * inv, p)};
}

} // namespace detail

// ---- local symbols over K -------------------------------------------------------

inline int hilbert_k(const NumberField& f, const FieldElement& alpha, const FieldElement& beta,
                     const PlaceK& w);

namespace detail {

inline int hilbert_k_arch(const NumberField& f, const FieldElement& alpha,
                          const FieldElement& beta, int embedding) {
    return (f.sign_at(alpha, embedding) == -1 && f.sign_at(beta, embedding) == -1) ? -1 : 1;
}

// split place: embed K into Q_p through a lifted root of the radicand, then
// fall back to the rational symbol on approximants whose square classes are
// already exact
inline int hilbert_k_split(const NumberField& f, const FieldElement& alpha,
                           const FieldElement& beta, const Int& p, SplitTag tag) {
    SqrtBasis sb = sqrt_basis(f);
    // scale by squares so the sqrt-basis coordinates are integers
    auto integral_coords = [&](const FieldElement& e) {
        auto [x, y] = sb.coords(e);
        Int L = boost::multiprecision::lcm(den(x), den(y));
        return std::pair<Int, Int>(num(x) * (L / den(x)) * L, num(y) * (L / den(y)) * L);
    };
    auto [xa, ya] = integral_coords(alpha);
    auto [xb, yb] = integral_coords(beta);

    long va = val_p(Rat(xa * xa - sb.m * ya * ya), p);
    long vb = val_p(Rat(xb * xb - sb.m * yb * yb), p);
    unsigned N = static_cast<unsigned>(va + vb) + 12;
    for (;;) {
        Int s = p == 2 ? sqrt_mod_2k(sb.m, N) : sqrt_mod_pk(sb.m, p, N);
        if (tag == SplitTag::split2) s = pow_int(p, N) - s;
        Int pn = pow_int(p, N);
        Int ta = mod_floor(xa + ya * s, pn);
        Int tb = mod_floor(xb + yb * s, pn);
        // enough precision iff the unit part survives with margin
        bool ok = true;
        for (const Int* t : {&ta, &tb}) {
            if (*t == 0 || val_p(Rat(*t), p) > static_cast<long>(N) - 4) ok = false;
        }
        if (ok) return hilbert_q(Rat(ta), Rat(tb), PlaceQ::prime(p));
        N *= 2; // unreachable in practice; the valuation bound keeps margin
    }
}

// tame symbol in the residue field F_{p^2}, odd inert p
inline int hilbert_k_inert(const NumberField& f, const FieldElement& alpha,
                           const FieldElement& beta, const Int& p) {
    SqrtBasis sb = sqrt_basis(f);
    auto [xa, ya] = sb.coords(alpha);
    auto [xb, yb] = sb.coords(beta);
    auto coord_val = [&](const Rat& x, const Rat& y) {
        long v = 1L << 30;
        if (x != 0) v = std::min(v, val_p(x, p));
        if (y != 0) v = std::min(v, val_p(y, p));
        return v;
    };
    long va = coord_val(xa, ya);
    long vb = coord_val(xb, yb);
    auto reduce_unit = [&](const Rat& x, const Rat& y, long v) {
        Rat scale = v >= 0 ? Rat(1) / pow_rat(Rat(p), static_cast<unsigned>(v))
                           : pow_rat(Rat(p), static_cast<unsigned>(-v));
        return detail::Fp2{residue(x * scale, p), residue(y * scale, p)};
    };
    Fp2 ua = reduce_unit(xa, ya, va);
    Fp2 ub = reduce_unit(xb, yb, vb);
    Int q2 = p * p;
    // u = (-1)^{va vb} ua^{vb} ub^{-va} in F_{p^2}^*, then ^((p^2-1)/2)
    Fp2 u{1, 0};
    auto fpow = [&](Fp2 base, long e) {
        if (e < 0) {
            base = fp2_inv(base, sb.m, p);
            e = -e;
        }
        return fp2_pow(base, Int(e), sb.m, p);
    };
    u = fp2_mul(u, fpow(ua, vb), sb.m, p);
    u = fp2_mul(u, fpow(ub, -va), sb.m, p);
    if ((va % 2) && (vb % 2)) u = fp2_mul(u, Fp2{p - 1, 0}, sb.m, p);
    Fp2 r = fp2_pow(u, (q2 - 1) / 2, sb.m, p);
    if (r.y != 0 || (r.x != 1 && r.x != p - 1))
        fail(errc::bad_input, "internal: tame symbol not a sign");
    return r.x == 1 ? 1 : -1;
}

// tame symbol with uniformizer sqrt(m), odd ramified p
inline int hilbert_k_ramified(const NumberField& f, const FieldElement& alpha,
                              const FieldElement& beta, const Int& p) {
    SqrtBasis sb = sqrt_basis(f);
    // pi = sqrt(m) = (2a + b)/s
    FieldElement pi = f.element({sb.b / sb.s, Rat(2) / sb.s});
    auto wval = [&](const FieldElement& e) {
        auto [x, y] = sb.coords(e);
        long v = 1L << 30;
        if (x != 0) v = std::min(v, 2 * val_p(x, p));
        if (y != 0) v = std::min(v, 2 * val_p(y, p) + 1);
        return v;
    };
    long va = wval(alpha), vb = wval(beta);
    auto unit_residue = [&](const FieldElement& e, long v) {
        FieldElement u = e;
        if (v > 0) u = f.div(u, f.pow(pi, static_cast<unsigned>(v)));
        else if (v < 0) u = f.mul(u, f.pow(pi, static_cast<unsigned>(-v)));
        auto [x, y] = sb.coords(u);
        (void)y; // val 0: the rational part carries the residue
        return residue(x, p);
    };
    Int ra = unit_residue(alpha, va);
    Int rb = unit_residue(beta, vb);
    // u = (-1)^{va vb} ra^{vb} rb^{-va} mod p
    Int u = 1;
    auto ppow = [&](const Int& base, long e) {
        Int b = mod_floor(base, p);
        if (e < 0) {
            b = inv_mod(b, p);
            e = -e;
        }
        return pow_mod(b, Int(e), p);
    };
    u = mod_floor(u * ppow(ra, vb), p);
    u = mod_floor(u * ppow(rb, -va), p);
    if ((va % 2) && (vb % 2)) u = mod_floor(u * (p - 1), p);
    Int r = pow_mod(u, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

// odd primes where a symbol can be nontrivial for either argument
inline std::set<Int> candidate_primes_k(const NumberField& f, const FieldElement& alpha,
                                        const FieldElement& beta) {
    SqrtBasis sb = sqrt_basis(f);
    std::set<Int> ps;
    auto add_factors = [&](const Int& n) {
        for (const auto& [q, e] : factor_int(n)) {
            (void)e;
            if (q != 2) ps.insert(q);
        }
    };
    add_factors(sb.m);
    for (const FieldElement* e : {&alpha, &beta}) {
        Rat n = f.norm(*e);
        add_factors(num(n));
        add_factors(den(n));
        auto [x, y] = sb.coords(*e);
        add_factors(den(x));
        add_factors(den(y));
    }
    return ps;
}

// the unique place above 2 (inert or ramified): forced by the product formula
inline int hilbert_k_2_by_reciprocity(const NumberField& f, const FieldElement& alpha,
                                      const FieldElement& beta) {
    int prod = 1;
    for (int i = 1; i <= 2; ++i) prod *= hilbert_k_arch(f, alpha, beta, i);
    for (const auto& p : candidate_primes_k(f, alpha, beta))
        for (const auto& w : places_above(f, p)) prod *= hilbert_k(f, alpha, beta, w);
    return prod;
}

} // namespace detail

inline int hilbert_k(const NumberField& f, const FieldElement& alpha, const FieldElement& beta,
                     const PlaceK& w) {
    if (f.degree() != 2) fail(errc::not_quadratic_field, "hilbert_k needs a quadratic field");
    if (f.is_zero(alpha) || f.is_zero(beta)) fail(errc::zero_input, "hilbert symbol needs nonzero entries");
    if (w.archimedean) return detail::hilbert_k_arch(f, alpha, beta, w.embedding);
    if (w.tag == SplitTag::split1 || w.tag == SplitTag::split2)
        return detail::hilbert_k_split(f, alpha, beta, w.p, w.tag);
    if (w.p == 2) return detail::hilbert_k_2_by_reciprocity(f, alpha, beta);
    if (w.tag == SplitTag::inert) return detail::hilbert_k_inert(f, alpha, beta, w.p);
    return detail::hilbert_k_ramified(f, alpha, beta, w.p);
}

// class of Cor(B) in Br(Q): at each rational place, the sum of the local
// invariants of B at the places above it
inline BrauerClass corestriction_class(const QuaternionAlgebra& B) {
    const NumberField& f = B.base;
    if (f.degree() != 2) fail(errc::not_quadratic_field, "corestriction_class needs a quadratic field");
    if (f.is_zero(B.alpha) || f.is_zero(B.beta)) fail(errc::zero_input, "nonzero entries required");

    BrauerClass out;
    int arch = 1;
    for (int i = 1; i <= 2; ++i) arch *= detail::hilbert_k_arch(f, B.alpha, B.beta, i);
    out.infinite = arch == -1;

    auto sum_above = [&](const Int& p) {
        int prod = 1;
        for (const auto& w : places_above(f, p)) prod *= hilbert_k(f, B.alpha, B.beta, w);
        return prod;
    };
    for (const auto& p : detail::candidate_primes_k(f, B.alpha, B.beta))
        if (sum_above(p) == -1) out.primes.insert(p);
    if (sum_above(Int(2)) == -1) out.primes.insert(2);

    if (out.size() % 2) fail(errc::bad_input, "internal: corestriction class has odd cardinality");
    return out;
}

// deterministic minimal representative: scan squarefree pairs ordered by
// max(|a|,|b|), then |a|, then sign of a (+ first), then |b|, then sign of b
inline QuaternionAlgebra quaternion_from_class(const BrauerClass& c) {
    if (c.size() % 2) fail(errc::bad_input, "brauer class must have even cardinality");
    long bound = 10000;
    if (const char* env = std::getenv("K3RM_SEARCH_BOUND")) {
        long v = std::atol(env);
        if (v > 0) bound = v;
    }
    auto squarefree = [](long v) {
        Int n(v < 0 ? -v : v);
        return squarefree_part(n) == n;
    };
    for (long m = 1; m <= bound; ++m) {
        for (long aa = 1; aa <= m; ++aa) {
            if (!squarefree(aa)) continue;
            for (int sa = 0; sa < 2; ++sa) {
                long a = sa ? -aa : aa;
                long bmax = m;
                for (long bb = (aa == m ? 1 : m); bb <= bmax; ++bb) {
                    if (!squarefree(bb)) continue;
                    for (int sb = 0; sb < 2; ++sb) {
                        long b = sb ? -bb : bb;
                        if (std::max(aa, bb) != m) continue;
                        if (ramification_q(Rat(a), Rat(b)) == c)
                            return make_quaternion_q(Rat(a), Rat(b));
                    }
                }
            }
        }
    }
    fail(errc::search_exhausted, "no representative within the search bound");
}

// B (x) R = H^{d-1} + M_2(R): the archimedean symbol is -1 at exactly d-1
// of the d real embeddings
inline bool ram_infinity_condition(const QuaternionAlgebra& B) {
    const NumberField& f = B.base;
    int count = 0;
    for (int i = 1; i <= f.degree(); ++i)
        if (f.sign_at(B.alpha, i) == -1 && f.sign_at(B.beta, i) == -1) ++count;
    return count == f.degree() - 1;
}

// Kuga-Satake descriptor: dimension 2^d, the corestriction class, and the
// endomorphism label of the simple factor
struct KsDescriptor {
    int d = 0;
    Int ks_dim;
    BrauerClass cor_class;
    std::string endo_label;                 // "split_M2" or "B_Cor"
    std::optional<std::pair<Rat, Rat>> endo_rep;
    bool definite = false;                  // d even
};

namespace detail {

inline KsDescriptor ks_descriptor_impl(const QuaternionAlgebra& B, const BrauerClass& cls) {
    const NumberField& f = B.base;
    if (!ram_infinity_condition(B))
        fail(errc::ram_condition_violated, "B (x) R must be H^(d-1) + M_2(R)");
    KsDescriptor r;
    r.d = f.degree();
    r.ks_dim = pow_int(2, static_cast<unsigned>(r.d));
    r.cor_class = cls;
    r.definite = r.d % 2 == 0;
    // parity remark: infinity ramifies exactly when d is even
    if (r.cor_class.infinite != (r.d % 2 == 0))
        fail(errc::bad_input, "parity remark violated: infinity in the class iff d even");
    if (r.cor_class.empty()) {
        r.endo_label = "split_M2";
    } else {
        r.endo_label = "B_Cor";
        auto rep = quaternion_from_class(r.cor_class);
        r.endo_rep = std::make_pair(rep.alpha.coords[0], rep.beta.coords[0]);
    }
    return r;
}

} // namespace detail

// quadratic base: the corestriction class is computed
inline KsDescriptor ks_descriptor(const QuaternionAlgebra& B) {
    if (B.base.degree() != 2)
        fail(errc::not_quadratic_field, "ks_descriptor computes classes over quadratic fields only");
    return detail::ks_descriptor_impl(B, corestriction_class(B));
}

// higher degree: the class is supplied by the caller (symbols above cubic
// and beyond are out of scope)
inline KsDescriptor ks_descriptor(const QuaternionAlgebra& B, const BrauerClass& supplied) {
    return detail::ks_descriptor_impl(B, supplied);
}

} // namespace k3rm

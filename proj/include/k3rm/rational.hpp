#pragma once

// Exact integer/rational scalars and the small number-theory kernel used
// throughout: parsing, factorization by trial division, square classes,
// Legendre symbols, modular arithmetic.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "k3rm/errors.hpp"

namespace k3rm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }
inline Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// "p/q" or "p"; accepts an optional leading sign on p.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) fail(errc::bad_input, "zero denominator in '" + s + "'");
        return Rat(p, q);
    } catch (const std::runtime_error& e) {
        throw;
    } catch (const std::exception&) {
        fail(errc::bad_input, "not a rational: '" + s + "'");
    }
}

inline std::string rat_str(const Rat& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r)) fail(errc::not_integral, rat_str(r) + " is not an integer");
    return num(r);
}

inline Int pow_int(Int base, unsigned e) {
    Int out = 1;
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

inline Rat pow_rat(const Rat& base, unsigned e) {
    return Rat(pow_int(num(base), e), pow_int(den(base), e));
}

inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += abs_int(m);
    return r;
}

// a^e mod m, e >= 0
inline Int pow_mod(const Int& a, const Int& e, const Int& m) {
    return boost::multiprecision::powm(mod_floor(a, m), e, m);
}

// Inverse of a mod m (gcd(a, m) = 1) via extended Euclid.
inline Int inv_mod(const Int& a, const Int& m) {
    Int r0 = mod_floor(a, m), r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) fail(errc::division_by_zero, "not invertible mod m");
    return mod_floor(s0, m);
}

inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square_int(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

inline bool is_square_rat(const Rat& r) {
    return r >= 0 && is_square_int(num(r)) && is_square_int(den(r));
}

// Miller-Rabin with the deterministic witness set for < 3.3e24.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = pow_mod(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// kth root of n if n is a perfect kth power, else 0
inline Int kth_root_exact(const Int& n, unsigned k) {
    Int lo = 1, hi = n;
    while (lo <= hi) {
        Int mid = (lo + hi) / 2;
        Int mp = pow_int(mid, k);
        if (mp == n) return mid;
        if (mp < n) lo = mid + 1; else hi = mid - 1;
    }
    return 0;
}

// prime -> exponent, for |n|; trial division, then Miller-Rabin and a
// perfect-power sweep on the tail. Inputs here are desk scale; a residual
// that is neither prime nor a prime power is reported, not mislabeled.
inline std::map<Int, unsigned> factor_int(Int n, const Int& trial_bound = Int(1000000)) {
    if (n == 0) fail(errc::zero_input, "factor of 0");
    std::map<Int, unsigned> f;
    n = abs_int(n);
    for (Int p = 2; p * p <= n && p <= trial_bound; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) {
        if (is_prime(n)) {
            ++f[n];
        } else {
            bool split = false;
            for (unsigned k = 2; Int(1) << k <= n; ++k) {
                Int r = kth_root_exact(n, k);
                if (r != 0 && is_prime(r)) {
                    f[r] += k;
                    split = true;
                    break;
                }
            }
            if (!split) fail(errc::bad_input, "factorization bound exceeded for " + n.str());
        }
    }
    return f;
}

// squarefree kernel of n, with the sign of n
inline Int squarefree_part(const Int& n) {
    if (n == 0) fail(errc::zero_input, "squarefree part of 0");
    Int out = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factor_int(n)) {
        if (e & 1u) out *= p;
    }
    return out;
}

// squarefree integer m with Q(sqrt r) = Q(sqrt m)
inline Int squarefree_radicand(const Rat& r) {
    return squarefree_part(num(r) * den(r));
}

// Legendre symbol (a|p) for odd prime p, a a p-unit rational.
inline int legendre(const Rat& a, const Int& p) {
    Int v = mod_floor(num(a) * inv_mod(den(a), p), p);
    if (v == 0) fail(errc::zero_input, "legendre of a non-unit");
    Int e = pow_mod(v, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// p-adic valuation of a nonzero rational
inline long val_p(const Rat& r, const Int& p) {
    if (r == 0) fail(errc::zero_input, "valuation of 0");
    long v = 0;
    Int n = num(r);
    while (n % p == 0) { n /= p; ++v; }
    Int d = den(r);
    while (d % p == 0) { d /= p; --v; }
    return v;
}

// unit part r / p^{val_p(r)}
inline Rat unit_part(const Rat& r, const Int& p) {
    long v = val_p(r, p);
    Rat u = r;
    Rat pw(pow_int(p, static_cast<unsigned>(v < 0 ? -v : v)));
    if (v > 0) u /= pw;
    if (v < 0) u *= pw;
    return u;
}

// x mod m for an m-unit rational x, as the least nonnegative residue
inline Int residue(const Rat& x, const Int& m) {
    return mod_floor(num(x) * inv_mod(den(x), m), m);
}

// (x-1)/2 mod 2 for odd x; nonzero iff x = 3 mod 4
inline int eps2(const Rat& x) {
    return residue(x, 4) == 3 ? 1 : 0;
}

// (x^2-1)/8 mod 2 for odd x; nonzero iff x = 3, 5 mod 8
inline int omega2(const Rat& x) {
    Int r = residue(x, 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

} // namespace k3rm

#pragma once

// Exact linear algebra on small dense matrices: rational determinants,
// integer determinants (Bareiss), and Smith normal form with transforms.

#include <utility>
#include <vector>

#include "k3rm/rational.hpp"

namespace k3rm {

using Mat = std::vector<std::vector<Rat>>;  // row-major, rectangular
using IMat = std::vector<std::vector<Int>>; // row-major, rectangular

inline Mat mat_identity(size_t n) {
    Mat m(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IMat imat_identity(size_t n) {
    IMat m(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat r(n, std::vector<Rat>(m, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

inline Mat mat_transpose(const Mat& a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    Mat r(m, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

inline std::vector<Rat> mat_apply(const Mat& a, const std::vector<Rat>& x) {
    std::vector<Rat> r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

inline Rat det_rat(Mat a) {
    size_t n = a.size();
    Rat d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

// Gauss-Jordan inverse; throws Degenerate on a singular input.
inline Mat mat_inverse(Mat a) {
    size_t n = a.size();
    Mat inv = mat_identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) fail(errc::degenerate, "matrix is singular");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rat f = a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] /= f;
            inv[c][j] /= f;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat g = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[c][j];
                inv[i][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

// Bareiss fraction-free elimination; exact over Z.
inline Int det_int(IMat a) {
    size_t n = a.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (size_t c = 0; c + 1 < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return Int(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i)
            for (size_t j = c + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
        prev = a[c][c];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

// u * a * v = diag(d) with u, v unimodular, d_i >= 0, d_1 | d_2 | ... .
struct SmithResult {
    std::vector<Int> diag; // length min(rows, cols)
    IMat u, v;
};

inline SmithResult smith_normal_form(IMat a) {
    size_t m = a.size(), n = m ? a[0].size() : 0;
    IMat u = imat_identity(m), v = imat_identity(n);

    auto row_swap = [&](size_t i, size_t j) { std::swap(a[i], a[j]); std::swap(u[i], u[j]); };
    auto col_swap = [&](size_t i, size_t j) {
        for (auto& r : a) std::swap(r[i], r[j]);
        for (auto& r : v) std::swap(r[i], r[j]);
    };
    auto row_add = [&](size_t dst, size_t src, const Int& f) { // row dst += f * row src
        for (size_t j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
        for (size_t j = 0; j < m; ++j) u[dst][j] += f * u[src][j];
    };
    auto col_add = [&](size_t dst, size_t src, const Int& f) {
        for (size_t i = 0; i < m; ++i) a[i][dst] += f * a[i][src];
        for (size_t i = 0; i < n; ++i) v[i][dst] += f * v[i][src];
    };
    auto row_neg = [&](size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    };

    size_t r = std::min(m, n);
    for (size_t t = 0; t < r; ++t) {
        // pivot: smallest nonzero absolute value in the trailing block
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (!found || abs_int(a[i][j]) < abs_int(a[pi][pj]))) {
                    pi = i; pj = j; found = true;
                }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            for (size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t]; // truncated quotient keeps remainders small
                if (q != 0) row_add(i, t, -q);
                if (a[i][t] != 0) { // remainder strictly smaller: promote it to pivot
                    row_swap(t, i);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                if (q != 0) col_add(j, t, -q);
                if (a[t][j] != 0) {
                    col_swap(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide the whole trailing block for the chain property
            for (size_t i = t + 1; i < m && !dirty; ++i)
                for (size_t j = t + 1; j < n && !dirty; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_add(t, i, Int(1));
                        dirty = true;
                    }
        }
        if (a[t][t] < 0) row_neg(t);
    }

    SmithResult res;
    res.diag.reserve(r);
    for (size_t t = 0; t < r; ++t) res.diag.push_back(a[t][t]);
    res.u = std::move(u);
    res.v = std::move(v);
    return res;
}

} // namespace k3rm

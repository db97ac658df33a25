#pragma once

#include <vector>

#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/series.hpp"
#include "jackpoly/shifted.hpp"

namespace jackpoly {

// G(x;t) = prod_i (1 - t x_i)^{-theta}, truncated at order K.
inline Series gen_G(const std::vector<Rat>& x, const Rat& theta, long K) {
    Series r = Series::one(K);
    for (const Rat& xi : x) r *= binomial_series(xi, theta, K);
    return r;
}

// B_k(u) = 1/(u(u-1)...(u-k+1)) as a series in w = 1/u:
// w^k / ((1-w)(1-2w)...(1-(k-1)w)).
inline Series falling_basis_series(long k, long K) {
    if (k < 0) throw validation_error("falling_basis_series: negative k");
    Series r(K);
    if (k <= K) r.c[k] = 1;
    for (long j = 1; j < k; ++j) {
        Series den(K);
        den.c[0] = 1;
        if (K >= 1) den.c[1] = Rat(-j);
        r *= den.inverse();
    }
    return r;
}

// G*(x;u) = sum_k g*_k(x) B_k(u) with coefficients stored in the
// falling-factorial basis: c[k] = g*_k(x).
inline Series gen_Gstar(const std::vector<Rat>& x, const Rat& theta, long K) {
    ShiftedEngine eng(theta);
    Series r(K);
    for (long k = 0; k <= K; ++k) r.c[k] = eng.gstar_k(k, x);
    return r;
}

// Converts falling-factorial-basis coefficients into a plain power series
// in w = 1/u.
inline Series falling_to_power(const Series& g) {
    Series r(g.K);
    for (long k = 0; k <= g.K; ++k) {
        if (g.c[k] == 0) continue;
        r += falling_basis_series(k, g.K) * g.c[k];
    }
    return r;
}

// Inverse of falling_to_power; triangular because B_k = w^k (1 + O(w)).
inline Series power_to_falling(const Series& s) {
    Series g(s.K);
    Series residual = s;
    for (long k = 0; k <= s.K; ++k) {
        g.c[k] = residual.c[k];
        if (g.c[k] != 0) residual -= falling_basis_series(k, s.K) * g.c[k];
    }
    return g;
}

// One factor of the product formula for G*(x;u) at an integer coordinate,
// as a series in w = 1/u.  For x >= 0 it is the finite product
// prod_{j=0}^{x-1} (v+j)/(v+theta+j) with v = -u - theta i; negative x
// uses the reciprocal form.
inline Series gstar_product_factor(long x, long i, const Rat& theta, long K) {
    Series f = Series::one(K);
    if (x >= 0) {
        for (long j = 0; j < x; ++j)
            f *= linear_ratio(theta * i - j, theta * i - theta - j, K);
    } else {
        for (long j = 1; j <= -x; ++j)
            f *= linear_ratio(theta * i - theta + j, theta * i + j, K);
    }
    return f;
}

// Product formula for G*(x_1,...,x_n;u) at integer coordinates, expanded
// as an exact series in w = 1/u.
inline Series gstar_product_series(const Parts& x, long n, const Rat& theta, long K) {
    if (static_cast<long>(x.size()) > n)
        throw validation_error("gstar_product_series: point longer than variable count");
    Series r = Series::one(K);
    for (size_t i = 0; i < x.size(); ++i)
        r *= gstar_product_factor(x[i], static_cast<long>(i) + 1, theta, K);
    return r;
}

// Exact g*_k values of an integer signature through the product formula,
// O(n K^2) instead of the multiset sum.
inline Series gstar_values_via_product(const Parts& x, const Rat& theta, long K) {
    return power_to_falling(gstar_product_series(x, static_cast<long>(x.size()), theta, K));
}

// B_k evaluated at the reflected argument u' = -u - a, as a series in
// w = 1/u: prod_{t=0}^{k-1} (-1)/(u + a + t).
inline Series falling_basis_series_reflected(long k, const Rat& a, long K) {
    Series r = Series::one(K);
    for (long t = 0; t < k; ++t) r *= reciprocal_linear(a + t, K) * Rat(-1);
    return r;
}

// Factorization over the positive and negative parts of a signature:
// G*(lambda;u) = G*(lambda+;u) G*(lambda-;-u-theta n-1), as exact series.
inline bool gstar_signature_split_check(const Signature& lam, const Rat& theta, long K) {
    const long n = lam.n();
    const auto [plus, minus] = split_signature(lam);
    const Series lhs = gstar_product_series(lam.p, n, theta, K);
    const Series plus_side = gstar_product_series(plus.p, n, theta, K);
    const Series minus_falling =
        power_to_falling(gstar_product_series(minus.p, n, theta, K));
    Series minus_side(K);
    minus_side.c[0] = minus_falling.c[0];
    for (long q = 1; q <= K; ++q) {
        if (minus_falling.c[q] == 0) continue;
        minus_side += falling_basis_series_reflected(q, theta * n + 1, K) * minus_falling.c[q];
    }
    return lhs == plus_side * minus_side;
}

// The convolution step of the inductive proof of the product formula:
// g*_k(x_1..x_n) = sum_{p+q=k} g*_p(x_1-q,..,x_{n-1}-q) g*_q(x_n).
inline bool gstar_convolution_check(const std::vector<Rat>& x, const Rat& theta, long kmax) {
    if (x.size() < 2) throw validation_error("gstar_convolution_check: need n >= 2");
    ShiftedEngine eng(theta);
    const std::vector<Rat> head_base(x.begin(), x.end() - 1);
    const std::vector<Rat> tail{x.back()};
    for (long k = 0; k <= kmax; ++k) {
        Rat rhs = 0;
        for (long q = 0; q <= k; ++q) {
            std::vector<Rat> head = head_base;
            for (Rat& h : head) h -= q;
            rhs += eng.gstar_k(k - q, head) * eng.gstar_k(q, tail);
        }
        if (eng.gstar_k(k, x) != rhs) return false;
    }
    return true;
}

// The telescoping Pochhammer-ratio identity used in the same induction:
// prod_{i=1}^{n-1} (-u-theta i+theta)_q / (-u-theta i)_q equals
// falling(u,q)/falling(u+theta(n-1),q).  Cross-multiplied and compared at
// enough integer sample points to pin the polynomials exactly.
inline bool pochhammer_ratio_check(long n, long q, const Rat& theta) {
    if (n < 2 || q < 0) throw validation_error("pochhammer_ratio_check: need n >= 2, q >= 0");
    const long degree = q * n;
    for (long s = 0; s <= degree; ++s) {
        const Rat u(s);
        Rat lhs_num = 1, lhs_den = 1;
        for (long i = 1; i < n; ++i) {
            lhs_num *= rising(-u - theta * i + theta, q);
            lhs_den *= rising(-u - theta * i, q);
        }
        const Rat rhs_num = falling(u, q);
        const Rat rhs_den = falling(u + theta * (n - 1), q);
        if (lhs_num * rhs_den != rhs_num * lhs_den) return false;
    }
    return true;
}

inline bool convolution_recursion_check(const std::vector<Rat>& x, const Rat& theta, long kmax) {
    const long n = static_cast<long>(x.size());
    if (!gstar_convolution_check(x, theta, kmax)) return false;
    for (long q = 0; q <= kmax; ++q)
        if (!pochhammer_ratio_check(n, q, theta)) return false;
    return true;
}

}  // namespace jackpoly

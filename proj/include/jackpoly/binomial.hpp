#pragma once

#include <utility>
#include <vector>

#include "jackpoly/jack.hpp"
#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/shifted.hpp"

namespace jackpoly {

// Expansion of Phi_lambda(z_1..z_k, 1, ..., 1) in the polynomials
// P_mu(z_1-1, ..., z_k-1).  A signature with negative last part is reduced
// to the partition lambda - lambda_n * 1^n; the dropped factor
// (z_1...z_k)^{lambda_n} is recorded in laurent_shift so the reconstruction
// stays an exact Laurent polynomial.
struct BinomialExpansion {
    Signature lambda;
    long n = 0;
    long k = 0;
    long laurent_shift = 0;
    Partition reduced;
    std::vector<std::pair<Partition, Rat>> coeffs;  // (mu, Q*_mu(reduced)/(n theta)_mu)
};

inline BinomialExpansion binomial_expand(ShiftedEngine& shifted, const Signature& lam,
                                         long k, long degree_cap) {
    const long n = lam.n();
    if (k < 0 || k > n) throw validation_error("binomial_expand: need 0 <= k <= n");
    BinomialExpansion ex;
    ex.lambda = lam;
    ex.n = n;
    ex.k = k;
    ex.laurent_shift = n > 0 ? std::min(lam.p.back(), 0L) : 0;
    Parts red = lam.p;
    for (long& v : red) v -= ex.laurent_shift;
    while (!red.empty() && red.back() == 0) red.pop_back();
    ex.reduced = Partition(std::move(red));

    const Rat theta = shifted.theta();
    std::vector<Rat> point(ex.reduced.p.begin(), ex.reduced.p.end());
    point.resize(static_cast<size_t>(n), 0);
    PstarEvaluator ev(theta, point);
    for_each_subpartition(ex.reduced, k, [&](const Partition& mu) {
        if (degree_cap >= 0 && mu.weight() > degree_cap) return;
        const Rat q = ev.eval(mu) * shifted.qstar_factor(mu);
        if (q == 0) return;
        ex.coeffs.emplace_back(mu, q / shifted_factorial(theta * n, mu, theta));
    });
    return ex;
}

// Rebuilds (z_1...z_k)^{-shift} * Phi_lambda(z_1..z_k,1,...,1) from the
// expansion, as an exact polynomial in z_1..z_k.
inline MultiPoly binomial_reconstruct(const BinomialExpansion& ex, JackEngine& jack) {
    MultiPoly total(ex.k);
    for (const auto& [mu, c] : ex.coeffs) {
        MultiPoly p = MultiPoly::from_symfun(jack.jack_P(mu, ex.k));
        for (long i = 0; i < ex.k; ++i) p = p.affine(i, 1, -1);
        total += p * c;
    }
    return total;
}

// The same normalized polynomial computed directly: expand P of the reduced
// partition in n variables, set the inactive variables to 1, divide by the
// all-ones value.
inline MultiPoly phi_polynomial_direct(const BinomialExpansion& ex, JackEngine& jack) {
    MultiPoly p = MultiPoly::from_symfun(jack.jack_P(ex.reduced, ex.n));
    for (long i = ex.k; i < ex.n; ++i) p = p.substitute(i, 1);
    p = p.keep_vars(ex.k);
    p *= Rat(1) / jack.principal(ex.reduced, ex.n);
    return p;
}

inline bool binomial_reconstruction_check(JackEngine& jack, ShiftedEngine& shifted,
                                          const Signature& lam, long k) {
    BinomialExpansion ex = binomial_expand(shifted, lam, k, -1);
    return binomial_reconstruct(ex, jack) == phi_polynomial_direct(ex, jack);
}

// Taylor coefficients of phi_n at z=1 for one active variable:
// Phi_lambda(z,1,..,1) = z^{shift} sum_j c_j (z-1)^j with
// c_j = g*_j(reduced)/(n theta)_j, zero beyond the first part.
inline std::vector<Rat> phi_taylor_coeffs(ShiftedEngine& shifted, const Signature& lam) {
    BinomialExpansion ex = binomial_expand(shifted, lam, 1, -1);
    const long top = ex.reduced.length() ? ex.reduced.p[0] : 0;
    std::vector<Rat> c(static_cast<size_t>(top) + 1, 0);
    c[0] = 1;
    for (const auto& [mu, v] : ex.coeffs) {
        if (mu.length() == 1) c[static_cast<size_t>(mu.p[0])] = v;
    }
    return c;
}

}  // namespace jackpoly

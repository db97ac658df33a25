#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"

namespace jackpoly {

// (lambda, 2 rho) = sum lambda_i (n + 1 - 2i) for a real weakly decreasing vector
inline Rat two_rho_pairing_rat(const std::vector<Rat>& lam) {
    const long n = static_cast<long>(lam.size());
    Rat s = 0;
    for (long i = 1; i <= n; ++i) s += lam[static_cast<size_t>(i) - 1] * (n + 1 - 2 * i);
    return s;
}

// |sum lambda_i (i-1)^m|  <=  |sum lambda_i| n^m + 2 (lambda,2rho) n^{m-1},
// exactly, for weakly decreasing rational vectors.
inline bool lemma55_check(const std::vector<Rat>& lam, long m) {
    if (m < 0) throw validation_error("lemma55_check: negative m");
    const long n = static_cast<long>(lam.size());
    if (n == 0) return true;
    for (size_t i = 1; i < lam.size(); ++i)
        if (lam[i] > lam[i - 1]) throw validation_error("lemma55_check: vector not weakly decreasing");

    Rat lhs = 0, total = 0;
    for (long i = 1; i <= n; ++i) {
        lhs += lam[static_cast<size_t>(i) - 1] * pow_rat(Rat(i - 1), m);
        total += lam[static_cast<size_t>(i) - 1];
    }
    if (lhs < 0) lhs = -lhs;
    if (total < 0) total = -total;
    const Rat rhs = total * pow_rat(Rat(n), m) + 2 * two_rho_pairing_rat(lam) * pow_rat(Rat(n), m - 1);
    return lhs <= rhs;
}

// Extreme points of the simplex {weakly decreasing, sum = 0, (lambda,2rho) = n}:
// k entries 1/k followed by n-k entries -1/(n-k).
inline std::vector<Rat> lemma55_extreme_point(long n, long k) {
    if (n < 2 || k < 1 || k >= n) throw validation_error("lemma55_extreme_point: need 1 <= k < n");
    std::vector<Rat> lam;
    for (long i = 0; i < k; ++i) lam.emplace_back(Rat(1) / k);
    for (long i = k; i < n; ++i) lam.emplace_back(Rat(-1) / (n - k));
    return lam;
}

// Empirical sup of |f(lambda)| / max(N(lambda), n)^{deg f} over a family of
// signatures.  The bounding constant is checked as a regression (recorded
// maximum), not against a fixed constant.
inline double growth_ratio(const std::function<Rat(const Signature&)>& f, long deg,
                           const std::vector<Signature>& family, const Rat& theta) {
    if (deg < 0) throw validation_error("growth_ratio: negative degree");
    double sup = 0;
    for (const Signature& lam : family) {
        const double norm = std::sqrt(to_double(norm_N2(lam, theta)));
        const double base = std::max(norm, static_cast<double>(lam.n()));
        double v = std::abs(to_double(f(lam)));
        if (deg == 0) {
            sup = std::max(sup, v);
            continue;
        }
        sup = std::max(sup, v / std::pow(base, static_cast<double>(deg)));
    }
    return sup;
}

}  // namespace jackpoly

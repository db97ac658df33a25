#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "jackpoly/jack_oracle.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/series.hpp"
#include "jackpoly/symfun.hpp"

namespace jackpoly {

// One alpha/beta/gamma parameter triple of an extended specialization.
struct ExtendedParams {
    std::vector<Rat> alpha;
    std::vector<Rat> beta;
    Rat gamma = 0;

    void validate() const {
        auto check = [](const std::vector<Rat>& v, const char* name) {
            for (size_t i = 0; i < v.size(); ++i) {
                if (v[i] < 0) throw validation_error(std::string(name) + " entries must be nonnegative");
                if (i && v[i] > v[i - 1])
                    throw validation_error(std::string(name) + " must be weakly decreasing");
            }
        };
        check(alpha, "alpha");
        check(beta, "beta");
        if (gamma < 0) throw validation_error("gamma must be nonnegative");
    }

    bool empty() const { return alpha.empty() && beta.empty() && gamma == 0; }
};

// Paired plus/minus parameters of a VK limit.
struct VkParams {
    ExtendedParams plus;
    ExtendedParams minus;

    void validate() const {
        plus.validate();
        minus.validate();
        const Rat b1p = plus.beta.empty() ? Rat(0) : plus.beta.front();
        const Rat b1m = minus.beta.empty() ? Rat(0) : minus.beta.front();
        if (b1p + b1m > 1) throw validation_error("beta+_1 + beta-_1 must be at most 1");
    }
};

// Image of the generating series G(t) = sum g_k t^k under the extended
// specialization: e^{gamma theta t} prod (1+t theta beta_i) / (1-t alpha_i)^theta.
inline Series extended_G_series(const ExtendedParams& par, const Rat& theta, long K) {
    par.validate();
    Series g = Series::var(K) * (par.gamma * theta);
    Series r = g.exp();
    for (const Rat& b : par.beta) {
        Series lin = Series::one(K);
        if (K >= 1) lin.c[1] = theta * b;
        r *= lin;
    }
    for (const Rat& a : par.alpha) r *= binomial_series(a, theta, K);
    return r;
}

// t' = -t/(1+theta t), the involution coupling the two parameter sets.
inline Series tprime_series(const Rat& theta, long K) {
    Series den = Series::one(K);
    if (K >= 1) den.c[1] = theta;
    return Series::var(K) * Rat(-1) * den.inverse();
}

// Doubly extended image of G(t): plus side in t, minus side in t'.
inline Series doubly_extended_G_series(const VkParams& par, const Rat& theta, long K) {
    par.validate();
    const Series minus_in_s = extended_G_series(par.minus, theta, K);
    return extended_G_series(par.plus, theta, K) * minus_in_s.compose(tprime_series(theta, K));
}

// p_k image under the single-sided specialization.
inline Rat extended_p_image(long k, const ExtendedParams& par, const Rat& theta) {
    if (k < 1) throw validation_error("extended_p_image: need k >= 1");
    Rat v = 0;
    for (const Rat& a : par.alpha) v += pow_rat(a, k);
    Rat bsum = 0;
    for (const Rat& b : par.beta) bsum += pow_rat(b, k);
    v += pow_rat(-theta, k - 1) * bsum;
    if (k == 1) v += par.gamma;
    return v;
}

// p_k images under the doubly extended specialization, k = 1..K, read off
// from log G via G(t) = exp(theta sum p_k t^k / k).
inline std::vector<Rat> doubly_extended_p_images(const VkParams& par, const Rat& theta, long K) {
    const Series lg = doubly_extended_G_series(par, theta, K).log();
    std::vector<Rat> images(static_cast<size_t>(K) + 1, 0);
    for (long k = 1; k <= K; ++k) images[static_cast<size_t>(k)] = lg.coef(k) * k / theta;
    return images;
}

// Value of a power-sum expansion (as produced by JackOracle::monomial_to_power)
// under given p_k images.
inline Rat specialize_p_expansion(const std::map<Parts, Rat>& expansion,
                                  const std::vector<Rat>& p_images) {
    Rat total = 0;
    for (const auto& [kappa, c] : expansion) {
        Rat term = c;
        for (long part : kappa) {
            if (part <= 0 || static_cast<size_t>(part) >= p_images.size())
                throw validation_error("specialize_p_expansion: p image out of range");
            term *= p_images[static_cast<size_t>(part)];
        }
        total += term;
    }
    return total;
}

// Extended specialization of a symmetric polynomial.  The input must be
// written in at least deg f variables so its power-sum expansion is the
// stable one.
inline Rat extended_special(const SymFun& f, const ExtendedParams& par, const Rat& theta) {
    par.validate();
    if (f.total_degree() > f.nvars)
        throw validation_error("extended_special: need at least deg f variables");
    JackOracle oracle(f.nvars, theta);
    std::vector<Rat> p_images(static_cast<size_t>(std::max(f.total_degree(), 0L)) + 1, 0);
    for (long k = 1; k <= f.total_degree(); ++k)
        p_images[static_cast<size_t>(k)] = extended_p_image(k, par, theta);
    return specialize_p_expansion(oracle.monomial_to_power(f), p_images);
}

inline Rat doubly_extended_special(const SymFun& f, const VkParams& par, const Rat& theta) {
    if (f.total_degree() > f.nvars)
        throw validation_error("doubly_extended_special: need at least deg f variables");
    JackOracle oracle(f.nvars, theta);
    return specialize_p_expansion(oracle.monomial_to_power(f),
                                  doubly_extended_p_images(par, theta, f.total_degree()));
}

// Limit moments g(k) of Theorem-3.1 type: coefficients of the doubly
// extended image of G(t).
inline std::vector<Rat> limit_g_moments(const VkParams& par, const Rat& theta, long K) {
    const Series g = doubly_extended_G_series(par, theta, K);
    return g.c;
}

// (1 + theta t)(1 + theta t') = 1 as an exact series identity.
inline bool tprime_involution_check(const Rat& theta, long K) {
    Series lin = Series::one(K);
    if (K >= 1) lin.c[1] = theta;
    const Series tp = tprime_series(theta, K);
    Series lin_tp = Series::one(K) + tp * theta;
    return lin * lin_tp == Series::one(K) &&
           tp.compose(tp) == Series::var(K);
}

// One-point limit function phi_{alpha,beta,gamma}(z) on the unit circle.
inline std::complex<double> limit_phi(const VkParams& par, const Rat& theta,
                                      std::complex<double> z) {
    par.validate();
    const double th = to_double(theta);
    auto side = [th](const ExtendedParams& p, std::complex<double> w) {
        std::complex<double> v = std::exp(to_double(p.gamma) * w);
        for (const Rat& b : p.beta) v *= 1.0 + to_double(b) * w;
        for (const Rat& a : p.alpha) v *= std::pow(1.0 - to_double(a) * w / th, -th);
        return v;
    };
    return side(par.plus, z - 1.0) * side(par.minus, 1.0 / z - 1.0);
}

// Multi-point limit: the product of one-point values (the limit functions
// factorize over torus coordinates).
inline std::complex<double> limit_Phi(const VkParams& par, const Rat& theta,
                                      const std::vector<std::complex<double>>& z) {
    std::complex<double> v = 1;
    for (const auto& zi : z) v *= limit_phi(par, theta, zi);
    return v;
}

}  // namespace jackpoly

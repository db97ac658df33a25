#pragma once

#include <complex>
#include <map>
#include <vector>

#include "jackpoly/jack.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/symfun.hpp"

namespace jackpoly {

// Probability measure on the integers with exact rational masses; the
// Laurent-coefficient measure M_n of phi_n lives here.
struct DiscreteMeasure {
    std::map<long, Rat> mass;

    Rat total() const {
        Rat t = 0;
        for (const auto& [xi, m] : mass) t += m;
        return t;
    }

    // sum xi^p
    Rat moment(long p) const {
        Rat t = 0;
        for (const auto& [xi, m] : mass) t += m * pow_rat(Rat(xi), p);
        return t;
    }

    // sum xi (xi-1) ... (xi-k+1)
    Rat factorial_moment(long k) const {
        Rat t = 0;
        for (const auto& [xi, m] : mass) t += m * falling(Rat(xi), k);
        return t;
    }

    // sum mass * z^xi
    std::complex<double> fourier(std::complex<double> z) const {
        std::complex<double> t = 0;
        for (const auto& [xi, m] : mass) {
            std::complex<double> p = xi >= 0 ? cpow(z, xi) : 1.0 / cpow(z, -xi);
            t += to_double(m) * p;
        }
        return t;
    }
};

// One level of links: omega(mu,lambda) = psi_{lambda/mu} P_mu(1^{n-1}) / P_lambda(1^n),
// the coefficient of Phi_mu when one variable of Phi_lambda is set to 1.
inline BranchingRow link_weights(JackEngine& eng, const Signature& lam) {
    const long n = lam.n();
    if (n == 0) throw validation_error("link_weights: empty signature has no level below");
    BranchingRow row;
    row.parent = lam;
    if (n == 1) {
        row.children.emplace_back(Signature{}, Rat(1));
        return row;
    }
    const Rat denom = eng.principal(lam);
    for_each_interlacing(lam, [&](const Signature& mu) {
        row.children.emplace_back(mu, psi_coefficient(lam, mu, eng.theta()) * eng.principal(mu) / denom);
    });
    return row;
}

// Laurent-coefficient measure of phi_n(z) = Phi_lambda(z,1,...,1):
// mass at xi = |lambda| - |mu| is the total link weight into level n-1
// signatures mu of that coweight.
inline DiscreteMeasure measure_from_phi(JackEngine& eng, const Signature& lam) {
    DiscreteMeasure m;
    if (lam.n() == 0) {
        m.mass[0] = 1;
        return m;
    }
    const long w = lam.weight();
    for (const auto& [mu, omega] : link_weights(eng, lam).children) {
        auto [it, inserted] = m.mass.try_emplace(w - mu.weight(), omega);
        if (!inserted) it->second += omega;
    }
    return m;
}

// Iterated projection of the delta measure at lambda down to level k:
// the distribution of Phi_mu coefficients in Phi_lambda(z_1..z_k,1,..,1).
inline std::map<Parts, Rat> project_delta(JackEngine& eng, const Signature& lam, long k) {
    const long n = lam.n();
    if (k < 0 || k > n) throw validation_error("project_delta: need 0 <= k <= n");
    std::map<Parts, Rat> dist{{lam.p, Rat(1)}};
    for (long level = n; level > k; --level) {
        std::map<Parts, Rat> next;
        for (const auto& [p, w] : dist) {
            for (const auto& [mu, omega] : link_weights(eng, Signature(p)).children) {
                const Rat contribution = w * omega;
                auto [it, inserted] = next.try_emplace(mu.p, contribution);
                if (!inserted) it->second += contribution;
            }
        }
        dist = std::move(next);
    }
    return dist;
}

}  // namespace jackpoly

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jackpoly/genfun.hpp"
#include "jackpoly/jack.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/specialization.hpp"

namespace jackpoly {

// floor(c * n) for rational c
inline long floor_rat_times(const Rat& c, long n) {
    Int num = numerator(c) * n;
    Int den = denominator(c);
    Int q = num / den;
    if (num < 0 && q * den != num) --q;
    return static_cast<long>(q);
}

// log of the rising factorial (a)_m for a > 0
inline double log_rising_f(double a, long m) {
    return std::lgamma(a + static_cast<double>(m)) - std::lgamma(a);
}

// log psi_{lambda/mu} in floating point; same Pochhammer-ratio product as
// the exact psi_coefficient, with each ratio taken through lgamma.
inline double log_psi_f(const Parts& lam, const Parts& mu, double theta) {
    if (mu.size() + 1 != lam.size()) throw validation_error("log_psi_f: length mismatch");
    double lp = 0;
    for (size_t j = 0; j < mu.size(); ++j) {
        const long m = mu[j] - lam[j + 1];
        if (m == 0) continue;
        for (size_t i = 0; i <= j; ++i) {
            const double off = theta * static_cast<double>(j - i);
            const double dmu = static_cast<double>(mu[i] - mu[j]);
            const double dlam = static_cast<double>(lam[i] - mu[j]);
            lp += log_rising_f(dmu + off + theta, m) - log_rising_f(dmu + off + 1, m);
            lp += log_rising_f(dlam + off + 1, m) - log_rising_f(dlam + off + theta, m);
        }
    }
    return lp;
}

// log P_lambda(1^n) for a signature, via the principal value of the reduced
// partition: log (n theta)_lam - log H'(lam).  The hook product is grouped
// into runs of constant conjugate value so each row costs one lgamma pair
// per distinct part value.
inline double log_principal_f(const Parts& sig, double theta) {
    const long n = static_cast<long>(sig.size());
    if (n == 0) return 0;
    Parts lam = sig;
    const long shift = lam.back();
    for (long& v : lam) v -= shift;

    std::vector<std::pair<long, long>> blocks;  // (distinct value, #parts >= value)
    for (size_t i = 0; i < lam.size() && lam[i] > 0; ++i) {
        if (blocks.empty() || blocks.back().first != lam[i]) blocks.emplace_back(lam[i], 0);
        ++blocks.back().second;
    }
    for (size_t s = 1; s < blocks.size(); ++s) blocks[s].second += blocks[s - 1].second;

    double lp = 0;
    for (long r = 0; r < n && lam[static_cast<size_t>(r)] > 0; ++r) {
        const long v = lam[static_cast<size_t>(r)];
        const double base = theta * static_cast<double>(n - r);
        lp += std::lgamma(base + static_cast<double>(v)) - std::lgamma(base);
        for (size_t s = 0; s < blocks.size(); ++s) {
            if (blocks[s].first > v) continue;
            const long upper = blocks[s].first;
            const long lower = s + 1 < blocks.size() ? blocks[s + 1].first : 0;
            const double c = static_cast<double>(v) +
                             theta * static_cast<double>(blocks[s].second - r - 1) + theta;
            lp -= std::lgamma(c - static_cast<double>(lower)) -
                  std::lgamma(c - static_cast<double>(upper));
        }
    }
    return lp;
}

// Laurent-coefficient measure of phi_n in floating point, usable at large n
// where the exact route is infeasible.  Masses are indexed by xi = |lambda/mu|.
inline std::map<long, double> measure_floating(const Signature& lam, double theta) {
    std::map<long, double> acc;
    const double log_denom = log_principal_f(lam.p, theta);
    const long w = lam.weight();
    for_each_interlacing(lam, [&](const Signature& mu) {
        const double lw =
            log_psi_f(lam.p, mu.p, theta) + log_principal_f(mu.p, theta) - log_denom;
        acc[w - mu.weight()] += std::exp(lw);
    });
    return acc;
}

inline std::complex<double> fourier_from_masses(const std::map<long, double>& masses,
                                                std::complex<double> z) {
    std::complex<double> t = 0;
    for (const auto& [xi, m] : masses)
        t += m * (xi >= 0 ? cpow(z, xi) : 1.0 / cpow(z, -xi));
    return t;
}

// A parametric sequence of signatures together with its limit parameters
// (known exactly from the construction).
struct VkSequence {
    std::string name;
    std::function<Signature(long)> gen;
    VkParams limit;
};

inline VkSequence row_sequence(const Rat& c) {
    VkSequence s;
    s.name = "row";
    s.gen = [c](long n) {
        Parts p(static_cast<size_t>(n), 0);
        p[0] = floor_rat_times(c, n);
        return Signature(std::move(p));
    };
    s.limit.plus.alpha = {c};
    return s;
}

inline VkSequence column_sequence(const Rat& b) {
    VkSequence s;
    s.name = "column";
    s.gen = [b](long n) {
        Parts p(static_cast<size_t>(n), 0);
        const long rows = std::min(floor_rat_times(b, n), n);
        std::fill(p.begin(), p.begin() + rows, 1L);
        return Signature(std::move(p));
    };
    s.limit.plus.beta = {b};
    return s;
}

inline VkSequence mixed_sequence(const Rat& c, const Rat& d) {
    VkSequence s;
    s.name = "mixed";
    s.gen = [c, d](long n) {
        if (n < 2) throw validation_error("mixed_sequence: need n >= 2");
        Parts p(static_cast<size_t>(n), 0);
        p[0] = floor_rat_times(c, n);
        p[static_cast<size_t>(n) - 1] = -floor_rat_times(d, n);
        return Signature(std::move(p));
    };
    s.limit.plus.alpha = {c};
    s.limit.minus.alpha = {d};
    return s;
}

// gamma-type sequence: about g*n boxes arranged as a near-square block, so
// every scaled row and column tends to zero while |lambda|/n tends to g.
inline VkSequence staircase_sequence(const Rat& g) {
    VkSequence s;
    s.name = "staircase";
    s.gen = [g](long n) {
        const long boxes = floor_rat_times(g, n);
        const long side = static_cast<long>(std::sqrt(static_cast<double>(std::max(boxes, 0L))));
        Parts p(static_cast<size_t>(n), 0);
        if (side > 0) {
            long rows = std::min(boxes / side, n);
            std::fill(p.begin(), p.begin() + rows, side);
            long rest = boxes - rows * side;
            if (rest > 0 && rows < n) p[static_cast<size_t>(rows)] = rest;
            if (!weakly_decreasing(p)) std::sort(p.begin(), p.end(), std::greater<long>());
        }
        return Signature(std::move(p));
    };
    s.limit.plus.gamma = g;
    return s;
}

inline VkSequence zero_sequence() {
    VkSequence s;
    s.name = "zero";
    s.gen = [](long n) { return Signature(Parts(static_cast<size_t>(n), 0)); };
    return s;
}

struct VkDiagnostics {
    double max_residual = 0;
    bool converged = true;
    Rat gamma_plus_raw = 0;
    Rat gamma_minus_raw = 0;
};

struct VkExtraction {
    VkParams params;
    VkDiagnostics diag;
};

// Finite-n parameter estimates at n_max and n_max/2 with Richardson
// extrapolation in 1/n; the residual between the two estimates is the
// convergence diagnostic.
inline VkExtraction vk_extract(const VkSequence& seq, long depth, long n_max) {
    if (depth < 1 || n_max < 8) throw validation_error("vk_extract: need depth >= 1, n_max >= 8");

    struct SideEst {
        std::vector<Rat> a, b;
        Rat delta = 0;
    };
    auto estimate = [&](long n) {
        Signature lam = seq.gen(n);
        if (lam.n() != n) throw validation_error("vk_extract: generator broke the length convention");
        auto [plus, minus] = split_signature(lam);
        auto one_side = [&](const Partition& part) {
            SideEst e;
            const Partition conj = conjugate(part);
            for (long i = 0; i < depth; ++i) {
                e.a.emplace_back(Rat(part.part(static_cast<size_t>(i))) / n);
                e.b.emplace_back(Rat(conj.part(static_cast<size_t>(i))) / n);
            }
            e.delta = Rat(part.weight()) / n;
            return e;
        };
        return std::make_pair(one_side(plus), one_side(minus));
    };

    const auto [p1, m1] = estimate(n_max);
    const auto [p0, m0] = estimate(n_max / 2);

    VkExtraction out;
    auto richardson = [&](const Rat& fine, const Rat& coarse) {
        out.diag.max_residual =
            std::max(out.diag.max_residual, std::abs(to_double(fine - coarse)));
        return fine * 2 - coarse;
    };
    auto extrap_list = [&](const std::vector<Rat>& fine, const std::vector<Rat>& coarse) {
        std::vector<Rat> r;
        for (size_t i = 0; i < fine.size(); ++i) {
            Rat v = richardson(fine[i], coarse[i]);
            if (std::abs(to_double(v)) < 1e-9) v = 0;
            r.push_back(std::move(v));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    auto fill_side = [&](ExtendedParams& par, Rat& gamma_raw, const SideEst& fine,
                         const SideEst& coarse) {
        par.alpha = extrap_list(fine.a, coarse.a);
        par.beta = extrap_list(fine.b, coarse.b);
        Rat delta = richardson(fine.delta, coarse.delta);
        gamma_raw = delta;
        for (const Rat& v : par.alpha) gamma_raw -= v;
        for (const Rat& v : par.beta) gamma_raw -= v;
        par.gamma = std::max(gamma_raw, Rat(0));
        if (to_double(gamma_raw) < -1e-3) out.diag.converged = false;
    };
    fill_side(out.params.plus, out.diag.gamma_plus_raw, p1, p0);
    fill_side(out.params.minus, out.diag.gamma_minus_raw, m1, m0);
    if (out.diag.max_residual > 1e-3) out.diag.converged = false;
    return out;
}

struct GridSpec {
    long roots = 64;
    long randoms = 32;
    std::uint64_t seed = 20240901;
};

// Deterministic torus sample: all roots of unity of the given order plus
// seeded uniform angles (the raw 53-bit construction, so the stream does
// not depend on the standard library's distribution implementation).
inline std::vector<std::complex<double>> torus_grid(const GridSpec& grid) {
    std::vector<std::complex<double>> pts;
    const double tau = 2 * std::acos(-1.0);
    for (long j = 0; j < grid.roots; ++j) {
        const double ang = tau * static_cast<double>(j) / static_cast<double>(grid.roots);
        pts.emplace_back(std::cos(ang), std::sin(ang));
    }
    std::mt19937_64 rng(grid.seed);
    for (long j = 0; j < grid.randoms; ++j) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        pts.emplace_back(std::cos(tau * u), std::sin(tau * u));
    }
    return pts;
}

struct ConvergenceRow {
    long n = 0;
    double sup_error = 0;
    std::vector<Rat> moment_error;  // index k = 1..depth, |g*_k(lambda(n))/n^k - g_k(limit)|
};

struct ConvergenceTable {
    std::string sequence_name;
    Rat theta;
    long k = 1;
    GridSpec grid;
    VkParams params;
    std::vector<ConvergenceRow> rows;
};

// Sup-error of Phi_{lambda(n)}(z_1..z_k,1,..,1) against the limit over the
// grid, plus exact scaled-moment errors.  k = 1 runs through the floating
// one-level measure and works at large n; k >= 2 evaluates the Jack
// polynomial itself and is desk-scale only.
inline ConvergenceTable convergence_experiment(const VkSequence& seq, const Rat& theta, long k,
                                               const GridSpec& grid, std::vector<long> ns,
                                               long moment_depth = 4) {
    if (k < 1) throw validation_error("convergence_experiment: need k >= 1");
    ConvergenceTable table;
    table.sequence_name = seq.name;
    table.theta = theta;
    table.k = k;
    table.grid = grid;
    table.params = seq.limit;

    const auto pts = torus_grid(grid);
    const std::vector<Rat> limit_g = limit_g_moments(seq.limit, theta, moment_depth);
    const double th = to_double(theta);

    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    auto run_one = [&](long n) {
        ConvergenceRow row;
        row.n = n;
        const Signature lam = seq.gen(n);
        if (k == 1) {
            const auto masses = measure_floating(lam, th);
            for (const auto& z : pts) {
                const double err = std::abs(fourier_from_masses(masses, z) -
                                            limit_phi(seq.limit, theta, z));
                row.sup_error = std::max(row.sup_error, err);
            }
        } else {
            if (n > 10) throw validation_error(
                "convergence_experiment: k >= 2 path is exact and limited to n <= 10");
            JackEngine eng(theta);
            std::mt19937_64 rng(grid.seed ^ 0x9e3779b97f4a7c15ULL);
            const double tau = 2 * std::acos(-1.0);
            auto tuples = std::vector<std::vector<std::complex<double>>>();
            for (const auto& z : pts)
                tuples.emplace_back(static_cast<size_t>(k), z);  // diagonal tuples
            for (long j = 0; j < grid.randoms; ++j) {
                std::vector<std::complex<double>> t;
                for (long r = 0; r < k; ++r) {
                    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                    t.emplace_back(std::cos(tau * u), std::sin(tau * u));
                }
                tuples.push_back(std::move(t));
            }
            for (const auto& t : tuples) {
                const double err =
                    std::abs(eng.phi_eval(lam, t) - limit_Phi(seq.limit, theta, t));
                row.sup_error = std::max(row.sup_error, err);
            }
        }
        const Series gs = gstar_values_via_product(lam.p, theta, moment_depth);
        for (long j = 1; j <= moment_depth; ++j) {
            Rat err = gs.c[static_cast<size_t>(j)] / pow_rat(Rat(n), j) -
                      limit_g[static_cast<size_t>(j)];
            if (err < 0) err = -err;
            row.moment_error.push_back(std::move(err));
        }
        return row;
    };

    std::vector<std::future<ConvergenceRow>> jobs;
    for (long n : ns)
        jobs.push_back(std::async(std::launch::async, run_one, n));
    for (auto& j : jobs) table.rows.push_back(j.get());
    return table;
}

}  // namespace jackpoly

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "jackpoly/jack.hpp"
#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"

namespace jackpoly {

// Cells of the horizontal strip mu/nu (1-based coordinates).
inline std::vector<Cell> skew_cells(const Partition& mu, const Partition& nu) {
    std::vector<Cell> cells;
    for (size_t i = 0; i < mu.p.size(); ++i) {
        const long from = i < nu.p.size() ? nu.p[i] : 0;
        for (long j = from + 1; j <= mu.p[i]; ++j) cells.push_back({static_cast<long>(i) + 1, j});
    }
    return cells;
}

// Evaluates shifted Jack polynomials at one fixed point by the branching
// recursion, memoized on (partition, suffix position) so one point can be
// reused across many mu (as the binomial expansion does).
class PstarEvaluator {
  public:
    PstarEvaluator(Rat theta, std::vector<Rat> x) : theta_(std::move(theta)), x_(std::move(x)) {}

    Rat eval(const Partition& mu) { return eval_at(mu.p, 0); }

  private:
    Rat eval_at(const Parts& mu, size_t pos) {
        if (mu.empty()) return 1;
        const size_t remaining = x_.size() - pos;
        if (mu.size() > remaining) return 0;
        const auto key = std::make_pair(mu, pos);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const Partition pmu(mu);
        Rat total = 0;
        for_each_interlacing_partition(pmu, [&](const Partition& nu) {
            Rat factor = 1;
            for (const Cell& s : skew_cells(pmu, nu)) {
                factor *= x_[pos] - (s.j - 1) + theta_ * (s.i - 1);
                if (factor == 0) break;
            }
            if (factor == 0) return;
            total += psi_coefficient(pmu, nu, theta_) * factor * eval_at(nu.p, pos + 1);
        });
        memo_.emplace(key, total);
        return total;
    }

    Rat theta_;
    std::vector<Rat> x_;
    std::map<std::pair<Parts, size_t>, Rat> memo_;
};

// Shifted Jack engine: polynomials P*_mu by the branching rule, the
// independent interpolation oracle, Q*-normalization, and g*_k values.
class ShiftedEngine {
  public:
    explicit ShiftedEngine(Rat theta) : theta_(std::move(theta)) {
        if (theta_ <= 0) throw validation_error("ShiftedEngine: theta must be positive");
    }

    const Rat& theta() const { return theta_; }

    // P*_mu(x_1,...,x_n) via the branching rule: peel x_1 with one cell
    // factor (x_1 - a'(s) + theta l'(s)) per skew cell.
    MultiPoly pstar(const Partition& mu, long n) {
        if (mu.length() > static_cast<size_t>(std::max(n, 0L)))
            throw validation_error("pstar: partition longer than variable count");
        return pstar_rec(mu.p, n);
    }

    // P*_mu evaluated at a point (signature entries allowed).
    Rat pstar_eval(const Partition& mu, const std::vector<Rat>& x) {
        PstarEvaluator ev(theta_, x);
        return ev.eval(mu);
    }

    Rat qstar_factor(const Partition& mu) const {
        return hook_Hprime(mu, theta_) / hook_H(mu, theta_);
    }

    // Q*_mu(x) = P*_mu(x) / (P_mu, P_mu) = P*_mu(x) H'(mu)/H(mu).
    Rat qstar_eval(const Partition& mu, const std::vector<Rat>& x) {
        return pstar_eval(mu, x) * qstar_factor(mu);
    }

    // g*_k(x) by the explicit multiplicity-weighted multiset sum: indices
    // 1 <= i_1 <= ... <= i_k <= n, weight prod (theta)_{m_l} / m_l!, and
    // the r-th chosen coordinate contributes (x_{i_r} - k + r).
    Rat gstar_k(long k, const std::vector<Rat>& x) {
        if (k < 0) throw validation_error("gstar_k: negative k");
        if (k == 0) return 1;
        return multiset_sum(x, k, 0, 1, Rat(1));
    }

    // Independent construction of P*_mu: solve the vanishing/normalization
    // conditions in the basis of products of shifted power sums.
    MultiPoly interpolation_oracle(const Partition& mu, long n) {
        if (mu.length() > static_cast<size_t>(n))
            throw validation_error("interpolation_oracle: partition longer than variable count");
        const long d = mu.weight();
        std::vector<MultiPoly> basis;
        std::vector<Parts> basis_index;
        for (long w = 0; w <= d; ++w) {
            for_each_partition_of(w, n, w, [&](const Partition& kappa) {
                basis_index.push_back(kappa.p);
                basis.push_back(pstar_power_product(kappa, n));
            });
        }
        std::vector<Parts> points;
        for (long w = 0; w <= d; ++w) {
            std::vector<Parts> stratum;
            for_each_partition_of(w, w, n, [&](const Partition& lam) { stratum.push_back(lam.p); });
            std::sort(stratum.begin(), stratum.end(), std::greater<Parts>());
            points.insert(points.end(), stratum.begin(), stratum.end());
        }
        if (points.size() != basis.size())
            throw validation_error("interpolation_oracle: basis/constraint dimension mismatch");

        const size_t dim = basis.size();
        std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(dim + 1, Rat(0)));
        for (size_t r = 0; r < dim; ++r) {
            std::vector<Rat> pt(static_cast<size_t>(n), Rat(0));
            for (size_t i = 0; i < points[r].size(); ++i) pt[i] = points[r][i];
            for (size_t c = 0; c < dim; ++c) a[r][c] = basis[c].eval(pt);
            a[r][dim] = (points[r] == mu.p) ? hook_H(mu, theta_) : Rat(0);
        }
        for (size_t col = 0; col < dim; ++col) {
            size_t piv = dim;
            for (size_t r = col; r < dim; ++r)
                if (a[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv == dim)
                throw validation_error("interpolation_oracle: singular interpolation system");
            std::swap(a[col], a[piv]);
            for (size_t r = 0; r < dim; ++r) {
                if (r == col || a[r][col] == 0) continue;
                const Rat f = a[r][col] / a[col][col];
                for (size_t j = col; j <= dim; ++j) a[r][j] -= f * a[col][j];
            }
        }
        MultiPoly result(n);
        for (size_t c = 0; c < dim; ++c) {
            const Rat coef = a[c][dim] / a[c][c];
            if (coef != 0) result += basis[c] * coef;
        }
        return result;
    }

    // Shifted power sum p*_m(x) = sum_i ((x_i - theta i)^m - (-theta i)^m).
    MultiPoly pstar_power_sum(long m, long n) {
        MultiPoly r(n);
        for (long i = 1; i <= n; ++i) {
            MultiPoly lin = MultiPoly::var(n, i - 1) - MultiPoly::constant(n, theta_ * i);
            MultiPoly pw = MultiPoly::one(n);
            for (long e = 0; e < m; ++e) pw *= lin;
            r += pw - MultiPoly::constant(n, pow_rat(-theta_ * i, m));
        }
        return r;
    }

  private:
    MultiPoly pstar_power_product(const Partition& kappa, long n) {
        MultiPoly r = MultiPoly::one(n);
        for (long part : kappa.p) r *= pstar_power_sum(part, n);
        return r;
    }

    MultiPoly pstar_rec(const Parts& mu, long n) {
        if (mu.empty()) return MultiPoly::one(n);
        if (static_cast<long>(mu.size()) > n) return MultiPoly::zero(n);
        const auto key = std::make_pair(mu, n);
        auto it = pstar_cache_.find(key);
        if (it != pstar_cache_.end()) return it->second;
        const Partition pmu(mu);
        MultiPoly total(n);
        for_each_interlacing_partition(pmu, [&](const Partition& nu) {
            MultiPoly factor = MultiPoly::constant(n, psi_coefficient(pmu, nu, theta_));
            const MultiPoly x1 = MultiPoly::var(n, 0);
            for (const Cell& s : skew_cells(pmu, nu))
                factor *= x1 + MultiPoly::constant(n, theta_ * (s.i - 1) - (s.j - 1));
            total += factor * lift(pstar_rec(nu.p, n - 1), n);
        });
        pstar_cache_.emplace(key, total);
        return total;
    }

    // Re-embeds a polynomial in x_2,...,x_n (variable index shift by one).
    static MultiPoly lift(const MultiPoly& f, long n) {
        MultiPoly r(n);
        for (const auto& [k, c] : f.terms) {
            std::vector<long> key(static_cast<size_t>(n), 0);
            for (size_t i = 0; i < k.size(); ++i) key[i + 1] = k[i];
            r.terms.emplace(std::move(key), c);
        }
        return r;
    }

    Rat multiset_sum(const std::vector<Rat>& x, long slots_left, size_t from, long next_r,
                     const Rat& prefix) {
        if (slots_left == 0) return prefix;
        Rat total = 0;
        const long k_total = slots_left + next_r - 1;
        for (size_t i = from; i < x.size(); ++i) {
            // Taking m copies of index i at positions next_r..next_r+m-1.
            Rat weight = 1;
            Rat factor = 1;
            for (long m = 1; m <= slots_left; ++m) {
                weight *= (theta_ + (m - 1)) / m;
                factor *= x[i] - (k_total - (next_r + m - 1));
                if (factor == 0) break;
                total += multiset_sum(x, slots_left - m, i + 1, next_r + m, prefix * weight * factor);
            }
        }
        return total;
    }

    Rat theta_;
    std::map<std::pair<Parts, long>, MultiPoly> pstar_cache_;
};

// Checks invariance under one adjacent shifted transposition:
// f(..., x_i, x_{i+1}, ...) = f(..., x_{i+1} - theta, x_i + theta, ...).
inline bool shifted_swap_invariant(const MultiPoly& f, long i, const Rat& theta) {
    if (i < 0 || i + 1 >= f.nvars) throw validation_error("shifted_swap_invariant: bad index");
    const auto ui = static_cast<size_t>(i);
    MultiPoly g(f.nvars);
    for (const auto& [k, c] : f.terms) {
        // Expand (x_{i+1} - theta)^{e_i} (x_i + theta)^{e_{i+1}} binomially.
        const long ei = k[ui], ej = k[ui + 1];
        for (long ai = 0; ai <= ei; ++ai) {
            for (long aj = 0; aj <= ej; ++aj) {
                auto key = k;
                key[ui] = aj;
                key[ui + 1] = ai;
                const Rat coef = c * binomial(ei, ai) * pow_rat(-theta, ei - ai) *
                                 binomial(ej, aj) * pow_rat(theta, ej - aj);
                g.add_term(std::move(key), coef);
            }
        }
    }
    return f == g;
}

// The four defining conditions of P*_mu in n variables: shifted symmetry,
// degree |mu|, vanishing at partitions not containing mu (checked up to
// weight wmax), and the normalization P*_mu(mu) = H(mu).
inline bool pstar_characterization_check(ShiftedEngine& eng, const Partition& mu, long n,
                                         long wmax, std::string* counterexample = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (counterexample) *counterexample = "pstar " + to_string(mu) + " n=" + std::to_string(n) +
                                              " theta=" + rat_str(eng.theta()) + ": " + msg;
        return false;
    };
    const MultiPoly f = eng.pstar(mu, n);
    for (long i = 0; i + 1 < n; ++i)
        if (!shifted_swap_invariant(f, i, eng.theta()))
            return fail("not invariant under shifted swap at index " + std::to_string(i));
    if (f.total_degree() != mu.weight()) return fail("degree differs from |mu|");
    bool ok = true;
    std::string where;
    for_each_partition_up_to(wmax, n, [&](const Partition& lam) {
        if (!ok || contains(lam, mu)) return;
        std::vector<Rat> pt(static_cast<size_t>(n), 0);
        for (size_t i = 0; i < lam.length(); ++i) pt[i] = lam.p[i];
        if (f.eval(pt) != 0) {
            ok = false;
            where = to_string(lam);
        }
    });
    if (!ok) return fail("does not vanish at " + where);
    std::vector<Rat> self(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < mu.length(); ++i) self[i] = mu.p[i];
    if (f.eval(self) != hook_H(mu, eng.theta())) return fail("normalization differs from H(mu)");
    return true;
}

}  // namespace jackpoly

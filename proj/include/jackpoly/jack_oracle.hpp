#pragma once

#include <map>
#include <set>
#include <vector>

#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/symfun.hpp"

namespace jackpoly {

// Ground-truth construction of Jack polynomials, independent of the
// branching recursion: Gram-Schmidt orthogonalization of the monomial
// basis under (p_lambda, p_mu) = delta * z_lambda * theta^{-l(lambda)}.
// Works in d = |lambda| variables, where degree-d symmetric functions are
// represented faithfully, then restricts to the requested variable count.
class JackOracle {
  public:
    JackOracle(long d, Rat theta) : d_(d), theta_(std::move(theta)) {
        if (d < 1) throw validation_error("JackOracle: need at least one variable");
        if (theta_ <= 0) throw validation_error("JackOracle: theta must be positive");
    }

    long vars() const { return d_; }

    // Product of power sums p_kappa expanded in the monomial basis.
    SymFun power_sum_poly(const Partition& kappa) {
        auto it = p_in_m_.find(kappa.p);
        if (it != p_in_m_.end()) return it->second;
        SymFun f = SymFun::one(d_);
        for (long part : kappa.p) f *= power_sum(d_, part);
        p_in_m_.emplace(kappa.p, f);
        return f;
    }

    // Expands f (degree <= d_, plain polynomial part) in the power-sum
    // basis, one exact linear solve per degree stratum.
    std::map<Parts, Rat> monomial_to_power(const SymFun& f) {
        if (f.nvars != d_) throw validation_error("monomial_to_power: wrong variable count");
        std::map<Parts, Rat> out;
        std::map<long, SymFun> by_degree;
        for (const auto& [key, c] : f.terms) {
            long w = 0;
            for (long e : key) {
                if (e < 0) throw validation_error("monomial_to_power: Laurent input");
                w += e;
            }
            auto [it, inserted] = by_degree.try_emplace(w, d_);
            it->second.terms.emplace(key, c);
        }
        for (auto& [w, part] : by_degree) {
            if (w > d_) throw validation_error("monomial_to_power: degree exceeds variable count");
            expand_stratum(w, part, out);
        }
        return out;
    }

    // Inner product (f, g) from Eq-2.1-style pairing of power sums.
    Rat inner(const SymFun& f, const SymFun& g) {
        const auto pf = monomial_to_power(f);
        const auto pg = monomial_to_power(g);
        Rat total = 0;
        for (const auto& [kappa, cf] : pf) {
            auto it = pg.find(kappa);
            if (it == pg.end()) continue;
            const Partition k(kappa);
            total += cf * it->second * z_lambda(k) *
                     pow_rat(theta_, -static_cast<long>(k.length()));
        }
        return total;
    }

    // The orthogonalized family member for lambda, restricted to n
    // variables.  Processing order is ascending lex, which refines
    // dominance, so the result is the dominance-triangular monic family.
    SymFun gram_schmidt(const Partition& lam, long n) {
        if (lam.length() > static_cast<size_t>(n))
            throw validation_error("gram_schmidt: partition longer than variable count");
        if (lam.weight() > d_)
            throw validation_error("gram_schmidt: weight exceeds oracle capacity");
        return restrict_vars(gs_member(lam), n);
    }

    // Re-expresses a SymFun computed in d_ variables in n variables:
    // drops orbits needing more than n variables, pads or trims keys.
    SymFun restrict_vars(const SymFun& f, long n) const {
        SymFun r(n);
        for (const auto& [key, c] : f.terms) {
            long nonzero = 0;
            for (long e : key) {
                if (e < 0) throw validation_error("restrict_vars: Laurent input");
                if (e != 0) ++nonzero;
            }
            if (nonzero > n) continue;
            Parts k = key;
            k.resize(static_cast<size_t>(n), 0);
            r.terms.emplace(std::move(k), c);
        }
        return r;
    }

  private:
    void ensure_stratum(long w) {
        if (gs_done_.count(w)) return;
        std::vector<Parts> order;
        for_each_partition_of(w, w, d_, [&](const Partition& mu) { order.push_back(mu.p); });
        std::sort(order.begin(), order.end());
        std::vector<SymFun> members;
        for (const auto& mu : order) {
            SymFun cur = SymFun::monomial(d_, Partition(mu));
            for (const auto& prev : members) {
                const Rat c = inner(cur, prev) / inner(prev, prev);
                if (c != 0) cur -= prev * c;
            }
            gs_cache_.emplace(mu, cur);
            members.push_back(std::move(cur));
        }
        gs_done_.insert(w);
    }

    SymFun gs_member(const Partition& lam) {
        if (lam.length() == 0) return SymFun::one(d_);
        ensure_stratum(lam.weight());
        return gs_cache_.at(lam.p);
    }

    // Solves f_w = sum c_kappa p_kappa within one degree stratum by exact
    // dense Gaussian elimination (systems stay tiny at desk scale).
    void expand_stratum(long w, const SymFun& fw, std::map<Parts, Rat>& out) {
        std::vector<Parts> basis;
        for_each_partition_of(w, w, d_, [&](const Partition& mu) { basis.push_back(mu.p); });
        std::vector<Parts> rows;
        std::map<Parts, size_t, std::greater<Parts>> row_index;
        auto intern = [&](const Parts& key) {
            auto [it, inserted] = row_index.try_emplace(key, rows.size());
            if (inserted) rows.push_back(key);
            return it->second;
        };
        std::vector<std::vector<std::pair<size_t, Rat>>> sparse_cols(basis.size());
        for (size_t j = 0; j < basis.size(); ++j)
            for (const auto& [k, c] : power_sum_poly(Partition(basis[j])).terms)
                sparse_cols[j].emplace_back(intern(k), c);
        std::vector<std::pair<size_t, Rat>> sparse_b;
        for (const auto& [k, c] : fw.terms) sparse_b.emplace_back(intern(k), c);

        const size_t nr = rows.size(), nc = basis.size();
        std::vector<std::vector<Rat>> a(nr, std::vector<Rat>(nc + 1, Rat(0)));
        for (size_t j = 0; j < nc; ++j)
            for (const auto& [i, c] : sparse_cols[j]) a[i][j] = c;
        for (const auto& [i, c] : sparse_b) a[i][nc] = c;

        std::vector<size_t> pivot_col_of_row(nr, nc);
        size_t rank = 0;
        for (size_t col = 0; col < nc && rank < nr; ++col) {
            size_t piv = nr;
            for (size_t i = rank; i < nr; ++i)
                if (a[i][col] != 0) {
                    piv = i;
                    break;
                }
            if (piv == nr) continue;
            std::swap(a[rank], a[piv]);
            for (size_t i = 0; i < nr; ++i) {
                if (i == rank || a[i][col] == 0) continue;
                const Rat f = a[i][col] / a[rank][col];
                for (size_t j = col; j <= nc; ++j) a[i][j] -= f * a[rank][j];
            }
            pivot_col_of_row[rank] = col;
            ++rank;
        }
        for (size_t i = rank; i < nr; ++i)
            if (a[i][nc] != 0)
                throw validation_error("monomial_to_power: inconsistent stratum system");
        for (size_t i = 0; i < rank; ++i) {
            const size_t col = pivot_col_of_row[i];
            const Rat c = a[i][nc] / a[i][col];
            if (c != 0) out[basis[col]] += c;
        }
    }

    long d_;
    Rat theta_;
    std::map<Parts, SymFun> p_in_m_;
    std::map<Parts, SymFun> gs_cache_;
    std::set<long> gs_done_;
};

}  // namespace jackpoly

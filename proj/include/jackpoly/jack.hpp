#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/symfun.hpp"

namespace jackpoly {

// One-variable-removal expansion of P_lambda: children mu interlace the
// parent and carry positive rational weights (branching psi, or link
// weights omega depending on who filled the row).
struct BranchingRow {
    Signature parent{Parts{0}};
    std::vector<std::pair<Signature, Rat>> children;
};

// Branching coefficient psi_{lambda/mu}: the double product over
// 1 <= i <= j < n of rising-factorial ratios, with m_j = mu_j - lambda_{j+1}.
// Independent of zero-padding of lambda, since padded columns give m_j = 0.
inline Rat psi_coefficient(const Signature& lam, const Signature& mu, const Rat& theta) {
    const long n = lam.n();
    if (mu.n() != n - 1) throw validation_error("psi: mu must have length n-1");
    if (!interlaces(lam, mu)) throw validation_error("psi: mu does not interlace lambda");
    Rat result = 1;
    for (long j = 1; j < n; ++j) {
        const long m = mu.p[j - 1] - lam.p[j];
        if (m == 0) continue;
        for (long i = 1; i <= j; ++i) {
            const Rat dmu = Rat(mu.p[i - 1] - mu.p[j - 1]) + theta * (j - i);
            const Rat dlam = Rat(lam.p[i - 1] - mu.p[j - 1]) + theta * (j - i);
            result *= rising(dmu + theta, m) / rising(dmu + 1, m);
            result *= rising(dlam + 1, m) / rising(dlam + theta, m);
        }
    }
    return result;
}

inline Rat psi_coefficient(const Partition& lam, const Partition& mu, const Rat& theta) {
    const size_t n = std::max(lam.length(), mu.length() + 1);
    if (n == 1) {
        if (!contains(lam, mu)) throw validation_error("psi: mu does not interlace lambda");
        return 1;  // single box row or empty/empty step
    }
    return psi_coefficient(Signature(lam, n), Signature(mu, n - 1), theta);
}

// Exact Jack polynomial engine.  Caches are per instance; computed values
// are returned by value and freely shareable.
class JackEngine {
  public:
    explicit JackEngine(Rat theta) : theta_(std::move(theta)) {
        if (theta_ <= 0) throw validation_error("JackEngine: theta must be positive");
    }

    const Rat& theta() const { return theta_; }

    // P_lambda in n variables for a partition, via the branching recursion.
    SymFun jack_P(const Partition& lam, long n) {
        if (n < 1) throw validation_error("jack_P: need at least one variable");
        if (lam.length() > n) throw validation_error("jack_P: partition longer than variable count");
        const auto key = std::make_pair(lam.p, n);
        auto it = jack_cache_.find(key);
        if (it != jack_cache_.end()) return it->second;
        SymFun result = compute_jack(lam, n);
        jack_cache_.emplace(key, result);
        return result;
    }

    // Rational Jack function of a signature: reduce by the smallest part
    // and shift the exponents back (P_{lambda+c} = (prod x_i)^c P_lambda).
    SymFun jack_P(const Signature& lam) {
        const long c = lam.p.back();
        Parts reduced = lam.p;
        for (long& v : reduced) v -= c;
        SymFun p = jack_P(Partition(reduced), lam.n());
        return c == 0 ? p : p.shifted(c);
    }

    // P_lambda(1,...,1) by the closed form (n theta)_lambda / H'(lambda).
    // The chain-sum oracle principal_chain validates this form in tests.
    Rat principal(const Partition& lam, long n) {
        if (lam.length() > n) throw validation_error("principal: partition longer than variable count");
        return shifted_factorial(theta_ * n, lam, theta_) / hook_Hprime(lam, theta_);
    }

    Rat principal(const Signature& lam) {
        const long c = lam.p.back();
        Parts reduced = lam.p;
        for (long& v : reduced) v -= c;
        return principal(Partition(reduced), lam.n());
    }

    // Oracle for the principal specialization: sum of psi-products over
    // all branching chains, independent of the closed form.
    Rat principal_chain(const Partition& lam, long n) {
        if (lam.length() > n) throw validation_error("principal_chain: partition longer than variable count");
        const auto key = std::make_pair(lam.p, n);
        auto it = principal_cache_.find(key);
        if (it != principal_cache_.end()) return it->second;
        Rat result;
        if (n == 1) {
            result = 1;
        } else {
            result = 0;
            const Signature padded(lam, static_cast<size_t>(n));
            for_each_interlacing(padded, [&](const Signature& mu) {
                result += psi_coefficient(padded, mu, theta_) *
                          principal_chain(Partition(mu.p), n - 1);
            });
        }
        principal_cache_.emplace(key, result);
        return result;
    }

    BranchingRow branching_row(const Signature& lam) {
        BranchingRow row;
        row.parent = lam;
        if (lam.n() < 2) throw validation_error("branching_row: need length >= 2");
        for_each_interlacing(lam, [&](const Signature& mu) {
            row.children.emplace_back(mu, psi_coefficient(lam, mu, theta_));
        });
        return row;
    }

    // Phi_lambda(z_1,...,z_k,1,...,1): normalized Jack function on the torus.
    std::complex<double> phi_eval(const Signature& lam, std::vector<std::complex<double>> z) {
        const long n = lam.n();
        if (static_cast<long>(z.size()) > n)
            throw validation_error("phi_eval: more points than variables");
        for (const auto& zi : z)
            if (std::abs(std::abs(zi) - 1.0) > 1e-12)
                throw validation_error("phi_eval: point off the unit circle");
        z.resize(static_cast<size_t>(n), std::complex<double>(1.0, 0.0));
        const SymFun p = jack_P(lam);
        return p.eval(z) / to_double(principal(lam));
    }

    // g_k = Q_{(k)} = (theta)_k / k! * P_{(k)}.
    SymFun g_k(long k, long n) {
        if (k < 0) throw validation_error("g_k: negative k");
        if (k == 0) return SymFun::one(n);
        return jack_P(Partition{k}, n) * (rising(theta_, k) / factorial(k));
    }

    // Norm (P_lambda, P_lambda) = H(lambda)/H'(lambda).
    Rat norm_P(const Partition& lam) const {
        return hook_H(lam, theta_) / hook_Hprime(lam, theta_);
    }

    // Cauchy identity: prod_{i,j} (1 - x_i y_j)^{-theta} equals
    // sum_lambda P_lambda(x) Q_lambda(y), compared through total degree D
    // in x (equivalently in y).  On mismatch reports one bad monomial.
    bool cauchy_check(long n, long m, long D, std::string* counterexample = nullptr) {
        if (n < 1 || m < 1) throw validation_error("cauchy_check: need positive variable counts");
        if (D < 0) throw validation_error("cauchy_check: negative degree");
        const long nm = n + m;
        MultiPoly lhs = MultiPoly::one(nm);
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < m; ++j) {
                MultiPoly factor(nm);
                Rat coef = 1;
                for (long k = 0; k <= D; ++k) {
                    std::vector<long> key(static_cast<size_t>(nm), 0);
                    key[static_cast<size_t>(i)] = k;
                    key[static_cast<size_t>(n + j)] = k;
                    factor.add_term(std::move(key), coef);
                    coef *= (theta_ + k) / (k + 1);
                }
                lhs = MultiPoly::mul_truncated(lhs, factor, 2 * D);
            }
        }
        lhs = bidegree_truncate(lhs, n, D);
        MultiPoly rhs(nm);
        for_each_partition_up_to(D, std::min(n, m), [&](const Partition& lam) {
            const SymFun px = jack_P(lam, n);
            const SymFun qy = jack_P(lam, m) * (Rat(1) / norm_P(lam));
            rhs += tensor(px, qy);
        });
        if (lhs == rhs) return true;
        if (counterexample) {
            counterexample->clear();
            for (const auto& [key, c] : lhs.terms) {
                if (rhs.coeff(key) != c) {
                    *counterexample = "x^" + parts_str(key) + ": lhs " + rat_str(c) +
                                      " vs rhs " + rat_str(rhs.coeff(key));
                    break;
                }
            }
            if (counterexample->empty()) {
                for (const auto& [key, c] : rhs.terms) {
                    if (lhs.coeff(key) != c) {
                        *counterexample = "x^" + parts_str(key) + ": lhs " +
                                          rat_str(lhs.coeff(key)) + " vs rhs " + rat_str(c);
                        break;
                    }
                }
            }
        }
        return false;
    }

  private:
    SymFun compute_jack(const Partition& lam, long n) {
        if (lam.length() == 0) return SymFun::one(n);
        if (n == 1) return SymFun::monomial(1, Parts{lam.p[0]});
        if (lam.length() == static_cast<size_t>(n)) {
            const long c = lam.p.back();
            Parts reduced = lam.p;
            for (long& v : reduced) v -= c;
            return jack_P(Partition(reduced), n).shifted(c);
        }
        SymFun result(n);
        const long w_lam = lam.weight();
        for_each_interlacing_partition(lam, [&](const Partition& mu) {
            const long w = w_lam - mu.weight();
            const Rat psi = psi_coefficient(lam, mu, theta_);
            const SymFun sub = jack_P(mu, n - 1);
            for (const auto& [tail, c] : sub.terms) {
                if (!tail.empty() && w < tail.front()) continue;
                Parts key;
                key.reserve(tail.size() + 1);
                key.push_back(w);
                key.insert(key.end(), tail.begin(), tail.end());
                result.add_term(std::move(key), psi * c);
            }
        });
        return result;
    }

    // Keeps terms whose total degree in the first nx variables is <= D.
    static MultiPoly bidegree_truncate(const MultiPoly& p, long nx, long D) {
        MultiPoly r(p.nvars);
        for (const auto& [key, c] : p.terms) {
            long dx = 0;
            for (long i = 0; i < nx; ++i) dx += key[static_cast<size_t>(i)];
            if (dx <= D) r.terms.emplace(key, c);
        }
        return r;
    }

    // P(x) * Q(y) as a MultiPoly in the concatenated variables.
    static MultiPoly tensor(const SymFun& a, const SymFun& b) {
        MultiPoly r(a.nvars + b.nvars);
        for (const auto& [ka, ca] : a.terms) {
            for_each_distinct_permutation(ka, [&](const Parts& pa) {
                for (const auto& [kb, cb] : b.terms) {
                    for_each_distinct_permutation(kb, [&](const Parts& pb) {
                        std::vector<long> key;
                        key.reserve(pa.size() + pb.size());
                        key.insert(key.end(), pa.begin(), pa.end());
                        key.insert(key.end(), pb.begin(), pb.end());
                        r.add_term(std::move(key), ca * cb);
                    });
                }
            });
        }
        return r;
    }

    Rat theta_;
    std::map<std::pair<Parts, long>, SymFun> jack_cache_;
    std::map<std::pair<Parts, long>, Rat> principal_cache_;
};

}  // namespace jackpoly

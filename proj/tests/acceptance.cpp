// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Criteria 1 and 7 also carry wall-clock budgets (120 s and 600 s).

#include <jackpoly/binomial.hpp>
#include <jackpoly/estimates.hpp>
#include <jackpoly/genfun.hpp>
#include <jackpoly/io.hpp>
#include <jackpoly/jack.hpp>
#include <jackpoly/jack_oracle.hpp>
#include <jackpoly/measures.hpp>
#include <jackpoly/shifted.hpp>
#include <jackpoly/specialization.hpp>
#include <jackpoly/vk.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace jackpoly;

namespace {

int g_failures = 0;

double run_reported(int idx, const std::string& name,
                    const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << name << " ("
              << std::fixed << std::setprecision(1) << secs << "s)";
    if (!ok && !note.empty()) std::cout << " [" << note << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
    return secs;
}

MultiPoly top_part(const MultiPoly& f, long w) {
    MultiPoly r(f.nvars);
    for (const auto& [e, c] : f.terms) {
        if (std::accumulate(e.begin(), e.end(), 0L) == w) r.add_term(e, c);
    }
    return r;
}

MultiPoly reconstruct_cached(const BinomialExpansion& ex, JackEngine& jack,
                             std::map<Parts, MultiPoly>& cache) {
    MultiPoly total(ex.k);
    for (const auto& [mu, c] : ex.coeffs) {
        auto it = cache.find(mu.p);
        if (it == cache.end()) {
            MultiPoly p = MultiPoly::from_symfun(jack.jack_P(mu, ex.k));
            for (long i = 0; i < ex.k; ++i) p = p.affine(i, 1, -1);
            it = cache.emplace(mu.p, std::move(p)).first;
        }
        total += it->second * c;
    }
    return total;
}

std::vector<Rat> rat_point(const Signature& lam) {
    return std::vector<Rat>(lam.p.begin(), lam.p.end());
}

Signature random_signature(std::mt19937_64& rng, long n, long bound) {
    std::uniform_int_distribution<long> part(-bound, bound);
    Parts p(static_cast<size_t>(n));
    for (long& v : p) v = part(rng);
    std::sort(p.begin(), p.end(), std::greater<long>());
    return Signature(std::move(p));
}

const std::vector<Rat> kThetaWide{Rat(1, 3), Rat(1, 2), Rat(1), Rat(2)};
const std::vector<Rat> kThetaCore{Rat(1, 2), Rat(1), Rat(2)};

bool criterion1(std::string& note) {
    for (const Rat& theta : kThetaWide) {
        JackEngine eng(theta);
        JackOracle oracle(6, theta);
        for (long n = 1; n <= 4; ++n) {
            bool ok = true;
            for_each_partition_up_to(6, n, [&](const Partition& lam) {
                if (!ok) return;
                if (eng.jack_P(lam, n).terms != oracle.gram_schmidt(lam, n).terms) {
                    ok = false;
                    note = "theta=" + rat_str(theta) + " n=" + std::to_string(n) +
                           " lambda=" + to_string(lam);
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

bool criterion2(std::string& note) {
    for (const Rat& theta : kThetaWide) {
        JackEngine eng(theta);
        JackOracle oracle(5, theta);
        bool ok = true;
        for_each_partition_up_to(5, 5, [&](const Partition& lam) {
            if (!ok || lam.empty()) return;
            const SymFun f = eng.jack_P(lam, 5);
            if (oracle.inner(f, f) != eng.norm_P(lam)) {
                ok = false;
                note = "theta=" + rat_str(theta) + " lambda=" + to_string(lam);
            }
        });
        if (!ok) return false;
    }
    return true;
}

bool criterion3(std::string& note) {
    for (const Rat& theta : kThetaCore) {
        ShiftedEngine eng(theta);
        JackEngine jack(theta);
        for (long n = 1; n <= 4; ++n) {
            bool ok = true;
            for_each_partition_up_to(5, n, [&](const Partition& mu) {
                if (!ok) return;
                const long wmax = mu.weight() + 2;
                if (!pstar_characterization_check(eng, mu, n, wmax, &note)) {
                    ok = false;
                    return;
                }
                const MultiPoly f = eng.pstar(mu, n);
                if (f != eng.interpolation_oracle(mu, n)) {
                    ok = false;
                    note = "interpolation mismatch at mu=" + to_string(mu) +
                           " n=" + std::to_string(n) + " theta=" + rat_str(theta);
                    return;
                }
                if (top_part(f, mu.weight()) != MultiPoly::from_symfun(jack.jack_P(mu, n))) {
                    ok = false;
                    note = "top term differs at mu=" + to_string(mu) + " n=" + std::to_string(n) +
                           " theta=" + rat_str(theta);
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

bool criterion4(std::string& note) {
    for (const Rat& theta : kThetaCore) {
        JackEngine jack(theta);
        ShiftedEngine shifted(theta);
        std::map<long, std::map<Parts, MultiPoly>> shifted_basis;  // per active count k
        for (size_t n = 1; n <= 4; ++n) {
            bool ok = true;
            for_each_signature_in_box(n, -3, 3, [&](const Signature& lam) {
                if (!ok) return;
                for (long k = 1; k <= static_cast<long>(n); ++k) {
                    const BinomialExpansion ex = binomial_expand(shifted, lam, k, -1);
                    if (reconstruct_cached(ex, jack, shifted_basis[k]) !=
                        phi_polynomial_direct(ex, jack)) {
                        ok = false;
                        note = "lambda=" + to_string(lam) + " k=" + std::to_string(k) +
                               " theta=" + rat_str(theta);
                        return;
                    }
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

bool criterion5(std::string& note) {
    const long K = 5;
    for (const Rat& theta : kThetaCore) {
        bool ok = true;
        for_each_partition_up_to(5, 3, [&](const Partition& lam) {
            if (!ok) return;
            Parts padded = lam.p;
            padded.resize(3, 0);
            const std::vector<Rat> x(padded.begin(), padded.end());
            if (falling_to_power(gen_Gstar(x, theta, K)).c !=
                gstar_product_series(padded, 3, theta, K).c) {
                ok = false;
                note = "product formula differs at " + to_string(lam) +
                       " theta=" + rat_str(theta);
            }
        });
        if (!ok) return false;

        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 50; ++trial) {
            const long n = 1 + static_cast<long>(rng() % 5);
            const Signature lam = random_signature(rng, n, 4);
            if (!gstar_signature_split_check(lam, theta, 6)) {
                note = "split fails at " + to_string(lam) + " theta=" + rat_str(theta);
                return false;
            }
        }
    }
    return true;
}

bool criterion6(std::string& note) {
    for (const Rat& theta : kThetaCore) {
        JackEngine jack(theta);
        ShiftedEngine shifted(theta);
        for (size_t n = 1; n <= 4; ++n) {
            const Rat ntheta = theta * static_cast<long>(n);
            bool ok = true;
            for_each_signature_in_box(n, -3, 3, [&](const Signature& lam) {
                if (!ok) return;
                const DiscreteMeasure m = measure_from_phi(jack, lam);
                auto fail = [&](const char* what) {
                    ok = false;
                    note = std::string(what) + " at " + to_string(lam) +
                           " theta=" + rat_str(theta);
                };
                if (m.total() != 1) return fail("total mass");
                if (m.moment(2) * static_cast<long>(n) * (ntheta + 1) != norm_N2(lam, theta))
                    return fail("second moment");
                const std::vector<Rat> x = rat_point(lam);
                for (long k = 1; k <= 3; ++k) {
                    if (m.factorial_moment(k) * rising(ntheta, k) !=
                        factorial(k) * shifted.gstar_k(k, x))
                        return fail("factorial moment");
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

bool criterion7(std::string& note) {
    const GridSpec grid;
    const std::vector<long> ns{50, 200};
    std::vector<VkSequence> seqs{row_sequence(Rat(1, 2)), column_sequence(Rat(1, 2)),
                                 mixed_sequence(Rat(1, 2), Rat(1, 3))};
    for (const VkSequence& seq : seqs) {
        for (const Rat& theta : kThetaCore) {
            const ConvergenceTable t = convergence_experiment(seq, theta, 1, grid, ns, 4);
            const double coarse = t.rows[0].sup_error;
            const double fine = t.rows[1].sup_error;
            auto fail = [&](const std::string& what) {
                note = seq.name + " theta=" + rat_str(theta) + ": " + what;
                return false;
            };
            if (fine >= 0.1) return fail("sup error too large at n=200");
            if (!(fine < coarse || fine <= 1e-12))
                return fail("sup error does not shrink");
            for (size_t k = 0; k < 4; ++k) {
                const Rat& mc = t.rows[0].moment_error[k];
                const Rat& mf = t.rows[1].moment_error[k];
                if (!(mf < mc || mf == 0))
                    return fail("moment error k=" + std::to_string(k + 1) +
                                " does not shrink");
            }
        }
    }
    return true;
}

bool criterion8(std::string& note) {
    for (const Rat& theta : kThetaCore) {
        JackEngine eng(theta);
        for (size_t n = 1; n <= 5; ++n) {
            bool ok = true;
            for_each_signature_in_box(n, -3, 3, [&](const Signature& lam) {
                if (!ok) return;
                const BranchingRow row = link_weights(eng, lam);
                Rat total = 0;
                for (const auto& [mu, w] : row.children) {
                    if (w <= 0) {
                        ok = false;
                        note = "nonpositive link at " + to_string(lam) +
                               " theta=" + rat_str(theta);
                        return;
                    }
                    total += w;
                }
                if (total != 1) {
                    ok = false;
                    note = "link row sum " + rat_str(total) + " at " + to_string(lam) +
                           " theta=" + rat_str(theta);
                }
            });
            if (!ok) return false;
        }

        for (size_t n = 2; n <= 4; ++n) {
            bool ok = true;
            for_each_signature_in_box(n, -3, 3, [&](const Signature& lam) {
                if (!ok) return;
                for (long k = 0; k < static_cast<long>(n); ++k) {
                    Rat total = 0;
                    for (const auto& [mu, w] : project_delta(eng, lam, k)) total += w;
                    if (total != 1) {
                        ok = false;
                        note = "projection mass at " + to_string(lam) + " k=" + std::to_string(k);
                        return;
                    }
                }
            });
            if (!ok) return false;
        }

        std::mt19937_64 rng(4242);
        for (int trial = 0; trial < 40; ++trial) {
            const Signature lam = random_signature(rng, 5, 3);
            const long k = static_cast<long>(rng() % 4);
            Rat total = 0;
            for (const auto& [mu, w] : project_delta(eng, lam, k)) total += w;
            if (total != 1) {
                note = "projection mass at " + to_string(lam) + " k=" + std::to_string(k) +
                       " theta=" + rat_str(theta);
                return false;
            }
        }
    }
    return true;
}

bool criterion9(std::string& note) {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 1000; ++trial) {
        const long n = 2 + static_cast<long>(rng() % 9);
        const long den = 1 + static_cast<long>(rng() % 6);
        std::uniform_int_distribution<long> num(-12, 12);
        std::vector<long> raw(static_cast<size_t>(n));
        for (long& v : raw) v = num(rng);
        std::sort(raw.begin(), raw.end(), std::greater<long>());
        std::vector<Rat> lam;
        lam.reserve(raw.size());
        for (long v : raw) lam.emplace_back(Rat(v) / den);
        for (long m = 0; m <= 4; ++m) {
            if (!lemma55_check(lam, m)) {
                std::ostringstream os;
                os << "trial " << trial << " m=" << m;
                note = os.str();
                return false;
            }
        }
    }
    return true;
}

bool criterion10(std::string& note) {
    for (const Rat& theta : kThetaWide) {
        const Series g = gen_G({Rat(1)}, theta, 2);
        if (g.coef(0) != 1 || g.coef(1) != theta || g.coef(2) != theta * (theta + 1) / 2) {
            note = "theta=" + rat_str(theta);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::cout << "acceptance checks" << std::endl;

    const double t1 = run_reported(1, "branching recursion matches the Gram-Schmidt oracle",
                                   criterion1);
    if (t1 > 120.0) {
        std::cout << "FAIL criterion 1 time budget: " << t1 << "s > 120s" << std::endl;
        ++g_failures;
    }
    run_reported(2, "norms match the hook product formula", criterion2);
    run_reported(3, "shifted polynomials satisfy the interpolation characterization", criterion3);
    run_reported(4, "binomial expansion rebuilds the normalized Laurent polynomial", criterion4);
    run_reported(5, "shifted generating series matches the coordinate product", criterion5);
    run_reported(6, "transition measures have exact moments", criterion6);
    const double t7 = run_reported(7, "normalized functions converge to the limit profile",
                                   criterion7);
    if (t7 > 600.0) {
        std::cout << "FAIL criterion 7 time budget: " << t7 << "s > 600s" << std::endl;
        ++g_failures;
    }
    run_reported(8, "link rows are stochastic and projections conserve mass", criterion8);
    run_reported(9, "weighted moment bound holds on fuzzed vectors", criterion9);
    run_reported(10, "generating series coefficients match the closed form", criterion10);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}

#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <vector>

#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"

namespace jackpoly {

// Integer power of a complex number by repeated squaring.
inline std::complex<double> cpow(std::complex<double> z, long e) {
    if (e < 0) return 1.0 / cpow(z, -e);
    std::complex<double> r = 1.0;
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

// Calls f once per distinct permutation of the given vector.
template <typename F>
void for_each_distinct_permutation(Parts key, F&& f) {
    std::sort(key.begin(), key.end());
    do {
        f(key);
    } while (std::next_permutation(key.begin(), key.end()));
}

// A symmetric (Laurent) polynomial in a fixed number of variables, stored
// in the monomial basis.  Keys are weakly decreasing exponent vectors of
// full length n; entries may be negative.  The map is ordered by
// descending lexicographic comparison so the dominant key comes first.
struct SymFun {
    long nvars = 0;
    std::map<Parts, Rat, std::greater<Parts>> terms;

    SymFun() = default;
    explicit SymFun(long n) : nvars(n) {
        if (n < 0) throw validation_error("SymFun: negative variable count");
    }

    static SymFun zero(long n) { return SymFun(n); }

    static SymFun one(long n) {
        SymFun s(n);
        s.terms[Parts(static_cast<size_t>(n), 0)] = 1;
        return s;
    }

    // The monomial symmetric function m_key.
    static SymFun monomial(long n, Parts key) {
        SymFun s(n);
        s.add_term(std::move(key), 1);
        return s;
    }

    static SymFun monomial(long n, const Partition& lam) {
        if (lam.length() > n)
            throw validation_error("SymFun::monomial: partition longer than variable count");
        Parts key = lam.p;
        key.resize(static_cast<size_t>(n), 0);
        return monomial(n, std::move(key));
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(Parts key, const Rat& c) {
        if (static_cast<long>(key.size()) != nvars)
            throw validation_error("SymFun: key length does not match variable count");
        if (!weakly_decreasing(key))
            throw validation_error("SymFun: key is not weakly decreasing");
        if (c == 0) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Rat coeff(const Parts& key) const {
        auto it = terms.find(key);
        return it == terms.end() ? Rat(0) : it->second;
    }

    Rat coeff(const Partition& lam) const {
        if (lam.length() > nvars) return Rat(0);
        Parts key = lam.p;
        key.resize(static_cast<size_t>(nvars), 0);
        return coeff(key);
    }

    // Highest key in descending lex order, i.e. the dominant one.
    const Parts& leading_key() const {
        if (terms.empty()) throw validation_error("SymFun: zero function has no leading key");
        return terms.begin()->first;
    }

    long total_degree() const {
        long d = 0;
        for (const auto& [k, c] : terms) {
            long w = 0;
            for (long e : k) w += e;
            d = std::max(d, w);
        }
        return d;
    }

    SymFun& operator+=(const SymFun& o) {
        check_vars(o);
        for (const auto& [k, c] : o.terms) add_term(k, c);
        return *this;
    }

    SymFun& operator-=(const SymFun& o) {
        check_vars(o);
        for (const auto& [k, c] : o.terms) add_term(k, -c);
        return *this;
    }

    SymFun& operator*=(const Rat& c) {
        if (c == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [k, v] : terms) v *= c;
        return *this;
    }

    friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
    friend SymFun operator*(SymFun a, const Rat& c) { return a *= c; }
    friend SymFun operator*(const Rat& c, SymFun a) { return a *= c; }

    // Product via orbit expansion: m_sigma * m_tau = sum over pairs of
    // distinct permutations (a, b) of x^(a+b).  A sum lands on the sorted
    // representative exactly once per contributing pair, so keeping only
    // weakly decreasing a+b counts the monomial coefficient correctly.
    friend SymFun operator*(const SymFun& a, const SymFun& b) {
        a.check_vars(b);
        SymFun r(a.nvars);
        for (const auto& [sk, sc] : a.terms) {
            std::vector<Parts> orbit;
            for_each_distinct_permutation(sk, [&](const Parts& p) { orbit.push_back(p); });
            for (const auto& [tk, tc] : b.terms) {
                const Rat prod = sc * tc;
                for_each_distinct_permutation(tk, [&](const Parts& tb) {
                    for (const auto& ta : orbit) {
                        Parts sum(ta.size());
                        for (size_t i = 0; i < ta.size(); ++i) sum[i] = ta[i] + tb[i];
                        if (weakly_decreasing(sum)) r.add_term(std::move(sum), prod);
                    }
                });
            }
        }
        return r;
    }

    SymFun& operator*=(const SymFun& o) { return *this = *this * o; }

    // Multiplies by (x_1 ... x_n)^c, shifting every exponent by c.
    SymFun shifted(long c) const {
        SymFun r(nvars);
        for (const auto& [k, v] : terms) {
            Parts key = k;
            for (long& e : key) e += c;
            r.terms.emplace(std::move(key), v);
        }
        return r;
    }

    Rat eval(const std::vector<Rat>& x) const {
        if (static_cast<long>(x.size()) != nvars)
            throw validation_error("SymFun::eval: wrong number of values");
        Rat total = 0;
        for (const auto& [k, c] : terms) {
            Rat orbit_sum = 0;
            for_each_distinct_permutation(k, [&](const Parts& a) {
                Rat m = 1;
                for (size_t i = 0; i < a.size(); ++i) m *= pow_rat(x[i], a[i]);
                orbit_sum += m;
            });
            total += c * orbit_sum;
        }
        return total;
    }

    std::complex<double> eval(const std::vector<std::complex<double>>& x) const {
        if (static_cast<long>(x.size()) != nvars)
            throw validation_error("SymFun::eval: wrong number of values");
        std::complex<double> total = 0.0;
        for (const auto& [k, c] : terms) {
            std::complex<double> orbit_sum = 0.0;
            for_each_distinct_permutation(k, [&](const Parts& a) {
                std::complex<double> m = 1.0;
                for (size_t i = 0; i < a.size(); ++i) m *= cpow(x[i], a[i]);
                orbit_sum += m;
            });
            total += to_double(c) * orbit_sum;
        }
        return total;
    }

    bool operator==(const SymFun& o) const { return nvars == o.nvars && terms == o.terms; }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms) {
            if (!first) os << " + ";
            first = false;
            os << "(" << rat_str(c) << ")*m" << parts_str(k);
        }
        return os.str();
    }

  private:
    void check_vars(const SymFun& o) const {
        if (nvars != o.nvars)
            throw validation_error("SymFun: mixed variable counts");
    }
};

// Power sum p_k as a SymFun (k >= 1).
inline SymFun power_sum(long n, long k) {
    if (k < 1) throw validation_error("power_sum: k must be positive");
    return SymFun::monomial(n, Partition{k});
}

// Elementary symmetric e_k; zero when k exceeds the variable count.
inline SymFun elementary(long n, long k) {
    if (k < 0) throw validation_error("elementary: negative k");
    if (k > n) return SymFun::zero(n);
    return SymFun::monomial(n, Partition(Parts(static_cast<size_t>(k), 1)));
}

}  // namespace jackpoly

#pragma once

#include <map>
#include <sstream>
#include <vector>

#include "jackpoly/rational.hpp"
#include "jackpoly/symfun.hpp"

namespace jackpoly {

// A sparse polynomial in nvars variables, not assumed symmetric.
// Keys are exponent vectors of full length nvars with entries >= 0.
struct MultiPoly {
    long nvars = 0;
    std::map<std::vector<long>, Rat> terms;

    MultiPoly() = default;
    explicit MultiPoly(long n) : nvars(n) {
        if (n < 0) throw validation_error("MultiPoly: negative variable count");
    }

    static MultiPoly zero(long n) { return MultiPoly(n); }

    static MultiPoly constant(long n, const Rat& c) {
        MultiPoly p(n);
        p.add_term(std::vector<long>(static_cast<size_t>(n), 0), c);
        return p;
    }

    static MultiPoly one(long n) { return constant(n, 1); }

    // The single variable x_i (0-based index).
    static MultiPoly var(long n, long i) {
        if (i < 0 || i >= n) throw validation_error("MultiPoly::var: index out of range");
        MultiPoly p(n);
        std::vector<long> key(static_cast<size_t>(n), 0);
        key[static_cast<size_t>(i)] = 1;
        p.add_term(std::move(key), 1);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(std::vector<long> key, const Rat& c) {
        if (static_cast<long>(key.size()) != nvars)
            throw validation_error("MultiPoly: key length does not match variable count");
        for (long e : key)
            if (e < 0) throw validation_error("MultiPoly: negative exponent");
        if (c == 0) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Rat coeff(const std::vector<long>& key) const {
        auto it = terms.find(key);
        return it == terms.end() ? Rat(0) : it->second;
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

    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [k, c] : o.terms) add_term(k, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [k, c] : o.terms) add_term(k, -c);
        return *this;
    }

    MultiPoly& operator*=(const Rat& c) {
        if (c == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [k, v] : terms) v *= c;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
    friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        return mul_truncated(a, b, -1);
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    // Product dropping terms of total degree above maxdeg (no truncation
    // when maxdeg < 0).
    static MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, long maxdeg) {
        a.check_vars(b);
        MultiPoly r(a.nvars);
        for (const auto& [ka, ca] : a.terms) {
            for (const auto& [kb, cb] : b.terms) {
                std::vector<long> key(ka.size());
                long deg = 0;
                for (size_t i = 0; i < ka.size(); ++i) {
                    key[i] = ka[i] + kb[i];
                    deg += key[i];
                }
                if (maxdeg >= 0 && deg > maxdeg) continue;
                r.add_term(std::move(key), ca * cb);
            }
        }
        return r;
    }

    Rat eval(const std::vector<Rat>& x) const {
        if (static_cast<long>(x.size()) != nvars)
            throw validation_error("MultiPoly::eval: wrong number of values");
        Rat total = 0;
        for (const auto& [k, c] : terms) {
            Rat m = c;
            for (size_t i = 0; i < k.size(); ++i) m *= pow_rat(x[i], k[i]);
            total += m;
        }
        return total;
    }

    // Substitutes x_i := a*x_i + b.
    MultiPoly affine(long i, const Rat& a, const Rat& b) const {
        if (i < 0 || i >= nvars) throw validation_error("MultiPoly::affine: index out of range");
        const auto ui = static_cast<size_t>(i);
        MultiPoly lin(nvars);
        std::vector<long> key(static_cast<size_t>(nvars), 0);
        lin.add_term(key, b);
        key[ui] = 1;
        lin.add_term(key, a);
        // Group terms by the exponent of x_i and expand powers of the
        // substituted linear form.
        std::map<long, MultiPoly> by_exp;
        for (const auto& [k, c] : terms) {
            auto rest = k;
            const long e = rest[ui];
            rest[ui] = 0;
            auto [it, inserted] = by_exp.try_emplace(e, nvars);
            it->second.add_term(std::move(rest), c);
        }
        MultiPoly result(nvars);
        MultiPoly pw = one(nvars);
        long cur = 0;
        for (const auto& [e, part] : by_exp) {
            while (cur < e) {
                pw = pw * lin;
                ++cur;
            }
            result += part * pw;
        }
        return result;
    }

    // Substitutes the constant v for x_i.
    MultiPoly substitute(long i, const Rat& v) const {
        if (i < 0 || i >= nvars) throw validation_error("MultiPoly::substitute: index out of range");
        const auto ui = static_cast<size_t>(i);
        MultiPoly r(nvars);
        for (const auto& [k, c] : terms) {
            auto key = k;
            const long e = key[ui];
            key[ui] = 0;
            r.add_term(std::move(key), c * pow_rat(v, e));
        }
        return r;
    }

    // Restricts to the first m variables; the others must not occur.
    MultiPoly keep_vars(long m) const {
        if (m < 0 || m > nvars) throw validation_error("MultiPoly::keep_vars: bad variable count");
        MultiPoly r(m);
        for (const auto& [k, c] : terms) {
            for (size_t i = static_cast<size_t>(m); i < k.size(); ++i)
                if (k[i] != 0)
                    throw validation_error("MultiPoly::keep_vars: dropped variable still present");
            r.add_term(Parts(k.begin(), k.begin() + m), c);
        }
        return r;
    }

    // Terms of maximal total degree.
    MultiPoly top_homogeneous() const {
        const long d = total_degree();
        MultiPoly r(nvars);
        for (const auto& [k, c] : terms) {
            long w = 0;
            for (long e : k) w += e;
            if (w == d) r.terms.emplace(k, c);
        }
        return r;
    }

    // Interprets this polynomial as a symmetric function; throws when the
    // coefficients are not constant on permutation orbits.
    SymFun to_symfun() const {
        SymFun s(nvars);
        std::map<Parts, std::pair<Rat, size_t>, std::greater<Parts>> groups;
        for (const auto& [k, c] : terms) {
            Parts sorted = k;
            std::sort(sorted.begin(), sorted.end(), std::greater<long>());
            auto [it, inserted] = groups.try_emplace(std::move(sorted), c, 1);
            if (!inserted) {
                if (it->second.first != c)
                    throw validation_error("MultiPoly::to_symfun: not symmetric");
                ++it->second.second;
            }
        }
        for (const auto& [key, info] : groups) {
            size_t orbit = 1;
            for_each_distinct_permutation(key, [&](const Parts&) { ++orbit; });
            --orbit;
            if (info.second != orbit)
                throw validation_error("MultiPoly::to_symfun: not symmetric");
            s.add_term(key, info.first);
        }
        return s;
    }

    // Expands each monomial orbit of a symmetric function.
    static MultiPoly from_symfun(const SymFun& s) {
        MultiPoly r(s.nvars);
        for (const auto& [key, c] : s.terms) {
            for_each_distinct_permutation(key, [&](const Parts& perm) { r.add_term(perm, c); });
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const { return nvars == o.nvars && terms == o.terms; }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms) {
            if (!first) os << " + ";
            first = false;
            os << "(" << rat_str(c) << ")*x^" << parts_str(k);
        }
        return os.str();
    }

  private:
    void check_vars(const MultiPoly& o) const {
        if (nvars != o.nvars)
            throw validation_error("MultiPoly: mixed variable counts");
    }
};

}  // namespace jackpoly

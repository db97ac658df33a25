#pragma once

#include <sstream>
#include <vector>

#include "jackpoly/rational.hpp"

namespace jackpoly {

// Power series truncated at order K: coefficients c[0..K] of t^0..t^K.
struct Series {
    long K = 0;
    std::vector<Rat> c;

    Series() : c(1, Rat(0)) {}
    explicit Series(long order) : K(order), c(static_cast<size_t>(order) + 1, Rat(0)) {
        if (order < 0) throw validation_error("Series: negative order");
    }
    Series(long order, std::vector<Rat> coefs) : K(order), c(std::move(coefs)) {
        if (order < 0 || c.size() != static_cast<size_t>(order) + 1)
            throw validation_error("Series: coefficient count does not match order");
    }

    static Series constant(long order, const Rat& v) {
        Series s(order);
        s.c[0] = v;
        return s;
    }

    static Series one(long order) { return constant(order, 1); }

    // The series t.
    static Series var(long order) {
        Series s(order);
        if (order >= 1) s.c[1] = 1;
        return s;
    }

    const Rat& coef(long k) const {
        if (k < 0 || k > K) throw validation_error("Series::coef: index out of range");
        return c[static_cast<size_t>(k)];
    }

    Rat& coef(long k) {
        if (k < 0 || k > K) throw validation_error("Series::coef: index out of range");
        return c[static_cast<size_t>(k)];
    }

    Series truncate(long order) const {
        if (order > K) throw validation_error("Series::truncate: cannot extend order");
        Series s(order);
        for (long k = 0; k <= order; ++k) s.c[k] = c[k];
        return s;
    }

    Series& operator+=(const Series& o) {
        check_order(o);
        for (long k = 0; k <= K; ++k) c[k] += o.c[k];
        return *this;
    }

    Series& operator-=(const Series& o) {
        check_order(o);
        for (long k = 0; k <= K; ++k) c[k] -= o.c[k];
        return *this;
    }

    Series& operator*=(const Rat& v) {
        for (auto& x : c) x *= v;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rat& v) { return a *= v; }
    friend Series operator*(const Rat& v, Series a) { return a *= v; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_order(b);
        Series r(a.K);
        for (long i = 0; i <= a.K; ++i) {
            if (a.c[i] == 0) continue;
            for (long j = 0; i + j <= a.K; ++j) {
                if (b.c[j] == 0) continue;
                r.c[i + j] += a.c[i] * b.c[j];
            }
        }
        return r;
    }

    Series& operator*=(const Series& o) { return *this = *this * o; }

    // Multiplicative inverse; requires a nonzero constant term.
    Series inverse() const {
        if (c[0] == 0) throw validation_error("Series::inverse: constant term is zero");
        Series r(K);
        r.c[0] = Rat(1) / c[0];
        for (long n = 1; n <= K; ++n) {
            Rat s = 0;
            for (long k = 1; k <= n; ++k) s += c[k] * r.c[n - k];
            r.c[n] = -s / c[0];
        }
        return r;
    }

    Series derivative() const {
        Series r(K);
        for (long k = 1; k <= K; ++k) r.c[k - 1] = c[k] * k;
        return r;
    }

    // log of a series with constant term 1, via (log f)' = f'/f.
    Series log() const {
        if (c[0] != 1) throw validation_error("Series::log: constant term must be 1");
        const Series d = derivative() * inverse();
        Series r(K);
        for (long k = 1; k <= K; ++k) r.c[k] = d.c[k - 1] / k;
        return r;
    }

    // Exponential of a series with zero constant term.
    Series exp() const {
        if (c[0] != 0) throw validation_error("Series::exp: constant term must be 0");
        Series r = one(K);
        Series pw = one(K);
        Rat fact = 1;
        for (long k = 1; k <= K; ++k) {
            pw *= *this;
            fact *= k;
            r += pw * (Rat(1) / fact);
        }
        return r;
    }

    // Composition f(g(t)); requires g(0) = 0.
    Series compose(const Series& g) const {
        check_order(g);
        if (g.c[0] != 0) throw validation_error("Series::compose: inner constant term must be 0");
        Series r = constant(K, c[K]);
        for (long k = K - 1; k >= 0; --k) {
            r = r * g;
            r.c[0] += c[k];
        }
        return r;
    }

    bool operator==(const Series& o) const { return K == o.K && c == o.c; }

    std::string to_string(const std::string& var_name = "t") const {
        std::ostringstream os;
        bool first = true;
        for (long k = 0; k <= K; ++k) {
            if (c[k] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << rat_str(c[k]);
            if (k >= 1) os << "*" << var_name;
            if (k >= 2) os << "^" << k;
        }
        if (first) os << "0";
        os << " + O(" << var_name << "^" << (K + 1) << ")";
        return os.str();
    }

  private:
    void check_order(const Series& o) const {
        if (K != o.K) throw validation_error("Series: mixed truncation orders");
    }
};

// Binomial series (1 - a*t)^(-s) up to order K: sum_k (s)_k / k! * a^k t^k.
inline Series binomial_series(const Rat& a, const Rat& s, long K) {
    Series r(K);
    Rat term = 1;
    r.c[0] = 1;
    for (long k = 1; k <= K; ++k) {
        term *= (s + (k - 1)) * a / k;
        r.c[k] = term;
    }
    return r;
}

// Series of 1/(u + a) in the variable w = 1/u: w/(1 + a*w).
inline Series reciprocal_linear(const Rat& a, long K) {
    Series r(K);
    Rat pw = 1;
    for (long k = 1; k <= K; ++k) {
        r.c[k] = pw;
        pw *= -a;
    }
    return r;
}

// Series of (u + a)/(u + b) in w = 1/u: (1 + a*w)/(1 + b*w).
inline Series linear_ratio(const Rat& a, const Rat& b, long K) {
    Series num(K);
    num.c[0] = 1;
    if (K >= 1) num.c[1] = a;
    Series den(K);
    den.c[0] = 1;
    if (K >= 1) den.c[1] = b;
    return num * den.inverse();
}

}  // namespace jackpoly

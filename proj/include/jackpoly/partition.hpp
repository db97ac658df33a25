#pragma once

// Partitions, signatures, cell statistics and the scalar combinatorial
// quantities (H, H', (t)_mu, z_lambda, N^2) everything else consumes.

#include <jackpoly/rational.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace jackpoly {

using Parts = std::vector<long>;

inline bool weakly_decreasing(const Parts& p) {
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i - 1] < p[i]) return false;
    return true;
}

// Weakly decreasing nonnegative parts, trailing zeros stripped.
struct Partition {
    Parts p;

    Partition() = default;
    explicit Partition(Parts parts) : p(std::move(parts)) {
        if (!weakly_decreasing(p)) throw validation_error("partition parts must be weakly decreasing");
        if (!p.empty() && p.back() < 0) throw validation_error("partition parts must be nonnegative");
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
    Partition(std::initializer_list<long> parts) : Partition(Parts(parts)) {}

    size_t length() const { return p.size(); }
    long weight() const { return std::accumulate(p.begin(), p.end(), 0L); }
    long part(size_t i) const { return i < p.size() ? p[i] : 0; } // 0-based, padded view
    bool empty() const { return p.empty(); }

    bool operator==(const Partition& o) const { return p == o.p; }
    bool operator<(const Partition& o) const { return p < o.p; }
};

// Weakly decreasing integers of explicit length n; zeros significant.
struct Signature {
    Parts p;

    Signature() = default;
    explicit Signature(Parts parts) : p(std::move(parts)) {
        if (p.empty()) throw validation_error("signature length must be >= 1");
        if (!weakly_decreasing(p)) throw validation_error("signature parts must be weakly decreasing");
    }
    Signature(std::initializer_list<long> parts) : Signature(Parts(parts)) {}
    explicit Signature(const Partition& lam, size_t n) {
        if (lam.length() > n) throw validation_error("partition longer than requested signature length");
        p = lam.p;
        p.resize(n, 0);
    }

    size_t n() const { return p.size(); }
    long weight() const { return std::accumulate(p.begin(), p.end(), 0L); }
    bool is_partition() const { return p.back() >= 0; }

    bool operator==(const Signature& o) const { return p == o.p; }
    bool operator<(const Signature& o) const { return p < o.p; }
};

struct Cell {
    long i, j; // 1-based row, column
};

struct CellStats {
    long arm, arm_co, leg, leg_co;
};

inline Partition conjugate(const Partition& lam) {
    Parts q;
    if (!lam.empty()) {
        q.resize(static_cast<size_t>(lam.p[0]));
        for (long j = 1; j <= lam.p[0]; ++j)
            q[j - 1] = static_cast<long>(std::count_if(lam.p.begin(), lam.p.end(),
                                                       [j](long part) { return part >= j; }));
    }
    return Partition(std::move(q));
}

inline CellStats cell_stats(const Partition& lam, Cell s) {
    if (s.i < 1 || s.j < 1 || s.i > static_cast<long>(lam.length()) || s.j > lam.p[s.i - 1])
        throw validation_error("cell outside diagram");
    Partition conj = conjugate(lam);
    return CellStats{lam.p[s.i - 1] - s.j, s.j - 1, conj.p[s.j - 1] - s.i, s.i - 1};
}

/// lambda = (lambda+, lambda-): positive parts, and negated reversed negative tail
inline std::pair<Partition, Partition> split_signature(const Signature& lam) {
    Parts plus, minus;
    for (long v : lam.p)
        if (v > 0) plus.push_back(v);
    for (auto it = lam.p.rbegin(); it != lam.p.rend(); ++it)
        if (*it < 0) minus.push_back(-*it);
    return {Partition(std::move(plus)), Partition(std::move(minus))};
}

inline Signature merge_signature(const Partition& plus, const Partition& minus, size_t n) {
    if (plus.length() + minus.length() > n)
        throw validation_error("signature length too small for the given positive/negative parts");
    Parts p = plus.p;
    p.resize(n - minus.length(), 0);
    for (auto it = minus.p.rbegin(); it != minus.p.rend(); ++it) p.push_back(-*it);
    return Signature(std::move(p));
}

// H(mu) = prod (a + theta l + 1) over cells
inline Rat hook_H(const Partition& mu, const Rat& theta) {
    Rat h = 1;
    Partition conj = conjugate(mu);
    for (size_t i = 0; i < mu.length(); ++i)
        for (long j = 1; j <= mu.p[i]; ++j)
            h *= Rat(mu.p[i] - j) + theta * (conj.p[j - 1] - static_cast<long>(i) - 1) + 1;
    return h;
}

// H'(mu) = prod (a + theta l + theta)
inline Rat hook_Hprime(const Partition& mu, const Rat& theta) {
    Rat h = 1;
    Partition conj = conjugate(mu);
    for (size_t i = 0; i < mu.length(); ++i)
        for (long j = 1; j <= mu.p[i]; ++j)
            h *= Rat(mu.p[i] - j) + theta * (conj.p[j - 1] - static_cast<long>(i) - 1) + theta;
    return h;
}

// generalized shifted factorial (t)_mu = prod (t + a'(s) - theta l'(s))
inline Rat shifted_factorial(const Rat& t, const Partition& mu, const Rat& theta) {
    Rat r = 1;
    for (size_t i = 0; i < mu.length(); ++i)
        for (long j = 1; j <= mu.p[i]; ++j)
            r *= t + (j - 1) - theta * static_cast<long>(i);
    return r;
}

inline Rat z_lambda(const Partition& lam) {
    Rat z = 1;
    size_t i = 0;
    while (i < lam.length()) {
        size_t j = i;
        while (j < lam.length() && lam.p[j] == lam.p[i]) ++j;
        z *= pow_rat(Rat(lam.p[i]), static_cast<long>(j - i)) * factorial(static_cast<long>(j - i));
        i = j;
    }
    return z;
}

// (lambda, 2rho) = sum_{i<j} (lambda_i - lambda_j); nonnegative for decreasing parts
inline Rat two_rho_pairing(const Parts& lam) {
    Rat s = 0;
    long n = static_cast<long>(lam.size());
    for (long i = 0; i < n; ++i) s += Rat(lam[i]) * (n - 1 - 2 * i);
    return s;
}

// N(lambda)^2 = sum lambda_i^2 + theta (sum lambda_i)^2 + theta (lambda, 2rho)
inline Rat norm_N2(const Signature& lam, const Rat& theta) {
    Rat sq = 0, s = 0;
    for (long v : lam.p) {
        sq += Rat(v) * v;
        s += v;
    }
    return sq + theta * s * s + theta * two_rho_pairing(lam.p);
}

inline bool contains(const Partition& lam, const Partition& mu) {
    for (size_t i = 0; i < mu.length(); ++i)
        if (mu.p[i] > lam.part(i)) return false;
    return true;
}

inline bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight()) return false;
    long a = 0, b = 0;
    size_t len = std::max(lam.length(), mu.length());
    for (size_t i = 0; i < len; ++i) {
        a += lam.part(i);
        b += mu.part(i);
        if (a < b) return false;
    }
    return true;
}

// mu interlaces lam: lam_1 >= mu_1 >= lam_2 >= ... >= mu_{n-1} >= lam_n
inline bool interlaces(const Signature& lam, const Signature& mu) {
    if (mu.n() + 1 != lam.n()) return false;
    for (size_t i = 0; i + 1 < lam.n(); ++i)
        if (mu.p[i] > lam.p[i] || mu.p[i] < lam.p[i + 1]) return false;
    return true;
}

// all signatures of length n-1 interlacing lam, lexicographically decreasing
template <typename F>
void for_each_interlacing(const Signature& lam, F&& f) {
    size_t m = lam.n() - 1;
    if (m == 0) return;
    Parts mu(m);
    for (size_t i = 0; i < m; ++i) mu[i] = lam.p[i];
    while (true) {
        f(Signature(mu));
        bool moved = false;
        for (size_t k = m; k-- > 0 && !moved;) {
            if (mu[k] > lam.p[k + 1]) {
                --mu[k];
                for (size_t t = k + 1; t < m; ++t) mu[t] = lam.p[t];
                moved = true;
            }
        }
        if (!moved) break;
    }
}

// partitions interlacing mu (used by the shifted branching rule)
template <typename F>
void for_each_interlacing_partition(const Partition& mu, F&& f) {
    size_t m = mu.length();
    if (m == 0) {
        f(Partition{});  // the empty chain keeps stepping to itself
        return;
    }
    Signature padded(mu, m + 1); // tail bound 0 allows nu of any length <= m
    for_each_interlacing(padded, [&](const Signature& nu) { f(Partition(nu.p)); });
}

template <typename F>
void for_each_partition_of(long w, long max_part, long max_len, F&& f) {
    Parts cur;
    auto rec = [&](auto&& self, long rem, long cap, long len) -> void {
        if (rem == 0) {
            f(Partition(cur));
            return;
        }
        if (len == 0) return;
        for (long v = std::min(cap, rem); v >= 1; --v) {
            cur.push_back(v);
            self(self, rem - v, v, len - 1);
            cur.pop_back();
        }
    };
    rec(rec, w, max_part, max_len);
}

template <typename F>
void for_each_partition_up_to(long max_weight, long max_len, F&& f) {
    for (long w = 0; w <= max_weight; ++w) for_each_partition_of(w, w, max_len, f);
}

// all partitions mu contained in bound with at most max_len parts
template <typename F>
void for_each_subpartition(const Partition& bound, long max_len, F&& f) {
    const long depth = std::min<long>(max_len, static_cast<long>(bound.length()));
    Parts cur;
    auto rec = [&](auto&& self, long i, long cap) -> void {
        f(Partition(cur));
        if (i >= depth) return;
        for (long v = 1; v <= std::min(cap, bound.p[static_cast<size_t>(i)]); ++v) {
            cur.push_back(v);
            self(self, i + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, bound.length() ? bound.p[0] : 0);
}

// all signatures of length n with parts in [lo, hi]
template <typename F>
void for_each_signature_in_box(size_t n, long lo, long hi, F&& f) {
    Parts cur(n, 0);
    auto rec = [&](auto&& self, size_t i, long cap) -> void {
        if (i == n) {
            f(Signature(cur));
            return;
        }
        for (long v = cap; v >= lo; --v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, hi);
}

inline std::string parts_str(const Parts& p) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    os << ']';
    return os.str();
}

inline std::string to_string(const Partition& lam) { return parts_str(lam.p); }
inline std::string to_string(const Signature& lam) { return parts_str(lam.p); }

// "[3,1,-2]" with optional spaces
inline Parts parse_parts(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw validation_error("malformed part list (expected e.g. [3,1,-2]): " + s);
    Parts out;
    std::string body = t.substr(1, t.size() - 2);
    if (body.empty()) return out;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw validation_error("malformed integer in part list: " + s);
        }
    }
    return out;
}

} // namespace jackpoly

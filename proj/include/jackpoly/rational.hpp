#pragma once

// Exact rational scalar type and the handful of factorial-style helpers the
// whole library leans on. Everything identity-shaped is computed in Rat;
// doubles appear only in the asymptotics code.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jackpoly {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw validation_error("rational with zero denominator");
    return Rat(num, den);
}

// rising factorial (a)_m = a(a+1)...(a+m-1)
inline Rat rising(const Rat& a, long m) {
    if (m < 0) throw validation_error("rising factorial needs m >= 0");
    Rat r = 1;
    for (long i = 0; i < m; ++i) r *= a + i;
    return r;
}

// falling factorial a(a-1)...(a-m+1)
inline Rat falling(const Rat& a, long m) {
    if (m < 0) throw validation_error("falling factorial needs m >= 0");
    Rat r = 1;
    for (long i = 0; i < m; ++i) r *= a - i;
    return r;
}

inline Rat factorial(long m) { return rising(Rat(1), m); }

inline Rat binomial(long n, long k) {
    if (k < 0) return 0;
    return falling(Rat(n), k) / factorial(k);
}

// integer power with negative exponents allowed for nonzero base
inline Rat pow_rat(const Rat& a, long e) {
    if (e < 0) {
        if (a == 0) throw validation_error("0 raised to a negative power");
        return 1 / pow_rat(a, -e);
    }
    Rat r = 1, b = a;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return r;
}

// "p/q" or "p"; used by the CLI and all JSON encodings
inline Rat parse_rat(const std::string& s) {
    auto trim = [](std::string v) {
        const char* ws = " \t";
        auto b = v.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        auto e = v.find_last_not_of(ws);
        return v.substr(b, e - b + 1);
    };
    std::string t = trim(s);
    if (t.empty()) throw validation_error("empty rational literal");
    try {
        auto slash = t.find('/');
        if (slash == std::string::npos) return Rat(Int(t));
        Int num(trim(t.substr(0, slash)));
        Int den(trim(t.substr(slash + 1)));
        if (den == 0) throw validation_error("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw validation_error("malformed rational literal: " + s);
    }
}

inline std::string rat_str(const Rat& x) {
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace jackpoly

#include <jackpoly/estimates.hpp>
#include <jackpoly/shifted.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

using namespace jackpoly;

namespace {

// weakly decreasing rational vector with entries num/den, num in [-bound, bound]
std::vector<Rat> random_decreasing(std::mt19937_64& rng, long n, long bound, long den) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::vector<long> raw(static_cast<size_t>(n));
    for (long& v : raw) v = num(rng);
    std::sort(raw.begin(), raw.end(), std::greater<long>());
    std::vector<Rat> out;
    out.reserve(raw.size());
    for (long v : raw) out.emplace_back(Rat(v) / den);
    return out;
}

Signature row_like(long n) {
    Parts p(static_cast<size_t>(n), 0);
    p[0] = n / 2;
    return Signature(std::move(p));
}

Signature column_like(long n) {
    Parts p(static_cast<size_t>(n), 0);
    std::fill(p.begin(), p.begin() + n / 2, 1L);
    return Signature(std::move(p));
}

}  // namespace

TEST_CASE("pairing with 2 rho matches the defining sum") {
    const std::vector<Rat> lam{Rat(3), Rat(1, 2), Rat(-1)};
    // n = 3: weights are 2, 0, -2
    REQUIRE(two_rho_pairing_rat(lam) == Rat(3) * 2 + Rat(-1) * (-2));
    REQUIRE(two_rho_pairing_rat({}) == 0);
}

TEST_CASE("moment bound holds on fuzzed decreasing vectors") {
    std::mt19937_64 rng(7321);
    for (int trial = 0; trial < 300; ++trial) {
        const long n = 2 + static_cast<long>(rng() % 7);
        const long den = 1 + static_cast<long>(rng() % 5);
        const auto lam = random_decreasing(rng, n, 9, den);
        for (long m = 0; m <= 4; ++m) {
            INFO("trial " << trial << " m=" << m);
            REQUIRE(lemma55_check(lam, m));
        }
    }
}

TEST_CASE("moment bound is tight at the simplex extreme points") {
    for (long n = 2; n <= 9; ++n) {
        for (long k = 1; k < n; ++k) {
            const auto lam = lemma55_extreme_point(n, k);
            Rat total = 0;
            for (const Rat& v : lam) total += v;
            REQUIRE(total == 0);
            REQUIRE(two_rho_pairing_rat(lam) == n);
            for (long m = 1; m <= 4; ++m) REQUIRE(lemma55_check(lam, m));
        }
    }
    // at these points the bound reads |sum lam_i (i-1)^m| <= 2 n^m
    const auto lam = lemma55_extreme_point(6, 2);
    Rat lhs = 0;
    for (size_t i = 0; i < lam.size(); ++i) lhs += lam[i] * pow_rat(Rat(static_cast<long>(i)), 3);
    if (lhs < 0) lhs = -lhs;
    REQUIRE(lhs <= 2 * pow_rat(Rat(6), 3));
}

TEST_CASE("moment bound rejects bad input") {
    REQUIRE_THROWS_AS(lemma55_check({Rat(1), Rat(2)}, 2), validation_error);
    REQUIRE_THROWS_AS(lemma55_check({Rat(1)}, -1), validation_error);
    REQUIRE_THROWS_AS(lemma55_extreme_point(5, 5), validation_error);
    REQUIRE_THROWS_AS(lemma55_extreme_point(1, 1), validation_error);
    REQUIRE(lemma55_check({}, 3));
}

TEST_CASE("growth ratio of g*_2 stays bounded over box families") {
    const Rat theta(1, 2);
    ShiftedEngine eng(theta);
    auto f = [&](const Signature& lam) {
        std::vector<Rat> x(lam.p.begin(), lam.p.end());
        return eng.gstar_k(2, x);
    };

    std::vector<Signature> family;
    for_each_signature_in_box(3, -3, 3, [&](const Signature& lam) { family.push_back(lam); });
    for_each_signature_in_box(4, -2, 2, [&](const Signature& lam) { family.push_back(lam); });
    for (long n = 5; n <= 40; n += 5) {
        family.push_back(row_like(n));
        family.push_back(column_like(n));
    }

    const double sup = growth_ratio(f, 2, family, theta);
    // regression record: observed 0.4286 on this family
    REQUIRE(sup > 0.3);
    REQUIRE(sup < 0.6);
}

TEST_CASE("growth ratio of shifted power sums stays bounded") {
    const Rat theta(2);
    ShiftedEngine eng(theta);
    // regression records per degree m: observed 0.1111, 0.3928, 1.0617
    const double upper[] = {0.2, 0.6, 1.5};
    for (long m = 1; m <= 3; ++m) {
        auto f = [&](const Signature& lam) {
            std::vector<Rat> x(lam.p.begin(), lam.p.end());
            return eng.pstar_power_sum(m, static_cast<long>(lam.n())).eval(x);
        };
        std::vector<Signature> family;
        for_each_signature_in_box(4, -2, 2, [&](const Signature& lam) { family.push_back(lam); });
        for (long n = 6; n <= 24; n += 6) {
            family.push_back(row_like(n));
            family.push_back(column_like(n));
        }
        const double sup = growth_ratio(f, m + 1, family, theta);
        REQUIRE(sup > 0.05);
        REQUIRE(sup < upper[m - 1]);
    }
}

TEST_CASE("growth ratio rejects a negative degree") {
    REQUIRE_THROWS_AS(growth_ratio([](const Signature&) { return Rat(1); }, -1, {}, Rat(1)),
                      validation_error);
}

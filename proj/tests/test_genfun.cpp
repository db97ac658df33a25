#include <jackpoly/genfun.hpp>
#include <jackpoly/jack.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace jackpoly;

TEST_CASE("G at the single point 1 gives the binomial coefficients of (1-t)^{-theta}") {
    for (const Rat& theta : {Rat(1, 3), Rat(1, 2), Rat(1), Rat(2)}) {
        const Series g = gen_G({Rat(1)}, theta, 4);
        REQUIRE(g.coef(0) == 1);
        REQUIRE(g.coef(1) == theta);
        REQUIRE(g.coef(2) == theta * (theta + 1) / 2);
        REQUIRE(g.coef(3) == theta * (theta + 1) * (theta + 2) / 6);
    }
}

TEST_CASE("G equals exp of the power-sum series") {
    const Rat theta(1, 2);
    const std::vector<Rat> x{Rat(2), Rat(3)};
    const long K = 6;
    Series ps(K);
    for (long k = 1; k <= K; ++k)
        ps.coef(k) = theta * (pow_rat(x[0], k) + pow_rat(x[1], k)) / k;
    REQUIRE(gen_G(x, theta, K) == ps.exp());
}

TEST_CASE("G coefficients evaluate the g_k symmetric polynomials") {
    const Rat theta(2, 3);
    JackEngine eng(theta);
    const std::vector<Rat> x{Rat(1, 2), Rat(2), Rat(1)};
    const Series g = gen_G(x, theta, 4);
    for (long k = 0; k <= 4; ++k) {
        REQUIRE(g.coef(k) == eng.g_k(k, 3).eval(x));
    }
}

TEST_CASE("falling basis series have the expected leading behavior") {
    const long K = 6;
    REQUIRE(falling_basis_series(0, K) == Series::one(K));
    // B_1 = w
    REQUIRE(falling_basis_series(1, K) == Series::var(K));
    // B_2 = w^2/(1-w) = w^2 + w^3 + ...
    const Series b2 = falling_basis_series(2, K);
    for (long k = 2; k <= K; ++k) REQUIRE(b2.coef(k) == 1);
    REQUIRE(b2.coef(1) == 0);
}

TEST_CASE("falling and power basis conversions invert each other") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        Series s(5);
        for (long k = 0; k <= 5; ++k)
            s.coef(k) = Rat(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 4));
        REQUIRE(falling_to_power(power_to_falling(s)) == s);
        REQUIRE(power_to_falling(falling_to_power(s)) == s);
    }
}

TEST_CASE("product formula matches the multiset definition for single coordinates") {
    const Rat theta(1, 2);
    ShiftedEngine eng(theta);
    for (long v = -3; v <= 3; ++v) {
        const Series prod = gstar_values_via_product({v}, theta, 4);
        for (long k = 0; k <= 4; ++k) {
            REQUIRE(prod.coef(k) == eng.gstar_k(k, {Rat(v)}));
        }
    }
}

TEST_CASE("product formula matches the multiset definition for partitions and signatures") {
    for (const Rat& theta : {Rat(1, 2), Rat(2)}) {
        ShiftedEngine eng(theta);
        for_each_signature_in_box(3, -2, 2, [&](const Signature& lam) {
            const Series prod = gstar_values_via_product(lam.p, theta, 4);
            std::vector<Rat> x(lam.p.begin(), lam.p.end());
            for (long k = 0; k <= 4; ++k) {
                REQUIRE(prod.coef(k) == eng.gstar_k(k, x));
            }
        });
    }
}

TEST_CASE("the two-box column value of g*_2 vanishes") {
    // (2) is not contained in (1,1), so the one-row Q* evaluates to zero there
    const Rat theta(17, 5);
    REQUIRE(gstar_values_via_product({1, 1}, theta, 2).coef(2) == 0);
    ShiftedEngine eng(theta);
    REQUIRE(eng.gstar_k(2, {Rat(1), Rat(1)}) == 0);
}

TEST_CASE("generating series in the falling basis round trips through the product form") {
    const Rat theta(2);
    for_each_partition_up_to(4, 3, [&](const Partition& lam) {
        std::vector<Rat> x(lam.p.begin(), lam.p.end());
        x.resize(3, 0);
        Parts key = lam.p;
        key.resize(3, 0);
        REQUIRE(falling_to_power(gen_Gstar(x, theta, 4)) ==
                gstar_product_series(key, 3, theta, 4));
    });
}

TEST_CASE("signature factorization into positive and negative parts") {
    const Rat theta(1, 2);
    REQUIRE(gstar_signature_split_check(Signature{1, 0, -1}, theta, 5));
    REQUIRE(gstar_signature_split_check(Signature{2, -1}, theta, 5));
    REQUIRE(gstar_signature_split_check(Signature{3, 1, 0, 0, -2}, theta, 4));
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        const long n = 1 + static_cast<long>(rng() % 5);
        Parts p;
        for (long i = 0; i < n; ++i) p.push_back(static_cast<long>(rng() % 9) - 4);
        std::sort(p.begin(), p.end(), std::greater<long>());
        INFO("lambda=" << parts_str(p));
        REQUIRE(gstar_signature_split_check(Signature(p), Rat(3, 2), 4));
    }
}

TEST_CASE("reflected falling basis at the zero signature") {
    // for the empty negative side the reflected series contributes only its constant term
    const Rat theta(1);
    const Signature zero{0, 0, 0};
    REQUIRE(gstar_signature_split_check(zero, theta, 4));
    REQUIRE(gstar_product_series(zero.p, 3, theta, 4) == Series::one(4));
}

TEST_CASE("convolution recursion over the last coordinate") {
    const Rat theta(1, 2);
    REQUIRE(convolution_recursion_check({Rat(3), Rat(1)}, theta, 4));
    REQUIRE(convolution_recursion_check({Rat(5, 2), Rat(1, 2), Rat(-1)}, Rat(2), 3));
    REQUIRE_THROWS_AS(gstar_convolution_check({Rat(1)}, theta, 2), validation_error);
}

TEST_CASE("telescoping ratio identity") {
    REQUIRE(pochhammer_ratio_check(2, 3, Rat(1, 2)));
    REQUIRE(pochhammer_ratio_check(4, 2, Rat(2)));
    REQUIRE(pochhammer_ratio_check(3, 0, Rat(1)));
}

#include <jackpoly/partition.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

using namespace jackpoly;

TEST_CASE("conjugate is an involution and matches hand values") {
    const Partition lam{4, 2, 1};
    REQUIRE(conjugate(lam) == Partition{3, 2, 1, 1});
    REQUIRE(conjugate(conjugate(lam)) == lam);
    REQUIRE(conjugate(Partition{}) == Partition{});
    REQUIRE(conjugate(Partition{5}) == Partition({1, 1, 1, 1, 1}));
}

TEST_CASE("hook products H and H' at theta = 1 agree with classical hooks") {
    // hooks of (2,1) are 3, 1, 1
    REQUIRE(hook_H(Partition{2, 1}, 1) == 3);
    REQUIRE(hook_Hprime(Partition{2, 1}, 1) == 3);
    REQUIRE(hook_H(Partition{3, 1}, 1) == 4 * 2 * 1 * 1);
}

TEST_CASE("hook products for (2,1) as functions of theta") {
    const Rat theta(3, 7);
    REQUIRE(hook_H(Partition{2, 1}, theta) == theta + 2);
    REQUIRE(hook_Hprime(Partition{2, 1}, theta) == theta * theta * (2 * theta + 1));
}

TEST_CASE("generalized shifted factorial over the cells of (2,1)") {
    const Rat theta(1, 2), t(5, 3);
    // cells contribute t, t+1, t-theta
    REQUIRE(shifted_factorial(t, Partition{2, 1}, theta) == t * (t + 1) * (t - theta));
    REQUIRE(shifted_factorial(Rat(0), Partition{1}, theta) == 0);
}

TEST_CASE("z_lambda on repeated parts") {
    REQUIRE(z_lambda(Partition{2, 1, 1}) == 4);
    REQUIRE(z_lambda(Partition{3, 3}) == 18);
    REQUIRE(z_lambda(Partition{}) == 1);
}

TEST_CASE("two_rho pairing equals the sum of pairwise differences") {
    const Parts lam{3, 1, 0, -2};
    Rat pairwise = 0;
    for (size_t i = 0; i < lam.size(); ++i)
        for (size_t j = i + 1; j < lam.size(); ++j) pairwise += Rat(lam[i] - lam[j]);
    REQUIRE(two_rho_pairing(lam) == pairwise);
    REQUIRE(two_rho_pairing(lam) >= 0);
}

TEST_CASE("norm functional N^2 matches its defining sum") {
    const Signature lam{3, 1, -2};
    const Rat theta(2, 3);
    const Rat expect = Rat(9 + 1 + 4) + theta * Rat(2) * Rat(2) + theta * two_rho_pairing(lam.p);
    REQUIRE(norm_N2(lam, theta) == expect);
}

TEST_CASE("interlacing enumeration agrees with the predicate") {
    const Signature lam{2, 1, -1};
    std::set<Parts> seen;
    for_each_interlacing(lam, [&](const Signature& mu) {
        REQUIRE(interlaces(lam, mu));
        REQUIRE(seen.insert(mu.p).second);  // no duplicates
    });
    // brute force over the box
    size_t count = 0;
    for (long a = -1; a <= 2; ++a)
        for (long b = -1; b <= a; ++b)
            if (interlaces(lam, Signature{a, b})) ++count;
    REQUIRE(seen.size() == count);
    REQUIRE(count == 6);
}

TEST_CASE("partition interlacing allows shorter mu") {
    std::set<Parts> seen;
    for_each_interlacing_partition(Partition{2, 2}, [&](const Partition& nu) {
        seen.insert(nu.p);
    });
    REQUIRE(seen == std::set<Parts>{{2, 2}, {2, 1}, {2}});
}

TEST_CASE("signature split and merge round trip") {
    const Signature lam{3, 1, 0, -2};
    const auto [plus, minus] = split_signature(lam);
    REQUIRE(plus == Partition{3, 1});
    REQUIRE(minus == Partition{2});
    REQUIRE(merge_signature(plus, minus, 4) == lam);
    REQUIRE_THROWS_AS(merge_signature(plus, minus, 2), validation_error);
}

TEST_CASE("containment and dominance") {
    REQUIRE(contains(Partition{3, 2}, Partition{2, 2}));
    REQUIRE_FALSE(contains(Partition{3, 2}, Partition{1, 1, 1}));
    REQUIRE(dominates(Partition{2}, Partition{1, 1}));
    REQUIRE_FALSE(dominates(Partition{1, 1}, Partition{2}));
    REQUIRE_FALSE(dominates(Partition{2}, Partition{2, 1}));  // different weights
}

TEST_CASE("partition enumeration counts") {
    long count = 0;
    for_each_partition_of(4, 4, 4, [&](const Partition&) { ++count; });
    REQUIRE(count == 5);
    count = 0;
    for_each_partition_of(6, 6, 2, [&](const Partition& p) {
        REQUIRE(p.length() <= 2);
        ++count;
    });
    REQUIRE(count == 4);  // 6, 51, 42, 33
    count = 0;
    for_each_partition_up_to(3, 3, [&](const Partition&) { ++count; });
    REQUIRE(count == 1 + 1 + 2 + 3);
}

TEST_CASE("subpartition enumeration stays inside the bound") {
    std::set<Parts> seen;
    for_each_subpartition(Partition{2, 1}, 2, [&](const Partition& mu) {
        REQUIRE(contains(Partition{2, 1}, mu));
        seen.insert(mu.p);
    });
    REQUIRE(seen.size() == 5);  // {}, 1, 2, 11, 21
    seen.clear();
    for_each_subpartition(Partition{2, 2}, 1, [&](const Partition& mu) { seen.insert(mu.p); });
    REQUIRE(seen == std::set<Parts>{{}, {1}, {2}});
}

TEST_CASE("signature box enumeration") {
    long count = 0;
    for_each_signature_in_box(2, -1, 1, [&](const Signature& s) {
        REQUIRE(weakly_decreasing(s.p));
        ++count;
    });
    REQUIRE(count == 6);
}

TEST_CASE("part list parsing") {
    REQUIRE(parse_parts("[3,1,-2]") == Parts{3, 1, -2});
    REQUIRE(parse_parts("[ 3 , 1 ]") == Parts{3, 1});
    REQUIRE(parse_parts("[]") == Parts{});
    REQUIRE_THROWS_AS(parse_parts("3,1"), validation_error);
    REQUIRE_THROWS_AS(parse_parts("[3;1]"), validation_error);
}

TEST_CASE("constructors reject malformed input") {
    REQUIRE_THROWS_AS(Partition({1, 2}), validation_error);
    REQUIRE_THROWS_AS(Partition({1, -1}), validation_error);
    REQUIRE_THROWS_AS(Signature(Parts{}), validation_error);
    REQUIRE_THROWS_AS(Signature({0, 1}), validation_error);
    REQUIRE(Signature({2, 0, -1}).weight() == 1);
    REQUIRE(Partition({3, 1, 0, 0}).length() == 2);  // trailing zeros stripped
}

TEST_CASE("cell statistics") {
    const auto st = cell_stats(Partition{4, 2, 1}, Cell{1, 2});
    REQUIRE(st.arm == 2);
    REQUIRE(st.arm_co == 1);
    REQUIRE(st.leg == 1);
    REQUIRE(st.leg_co == 0);
    REQUIRE_THROWS_AS(cell_stats(Partition{2}, Cell{1, 3}), validation_error);
}

#include <jackpoly/measures.hpp>
#include <jackpoly/vk.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

using namespace jackpoly;

TEST_CASE("rational floor scaling") {
    REQUIRE(floor_rat_times(Rat(1, 3), 10) == 3);
    REQUIRE(floor_rat_times(Rat(1, 3), 12) == 4);
    REQUIRE(floor_rat_times(Rat(-1, 3), 10) == -4);
    REQUIRE(floor_rat_times(Rat(2), 7) == 14);
}

TEST_CASE("floating branching weight matches the exact one") {
    const double theta = 0.5;
    const Signature lam{3, 1, 0, -2};
    for_each_interlacing(lam, [&](const Signature& mu) {
        const double exact =
            to_double(psi_coefficient(lam, mu, Rat(1, 2)));
        REQUIRE(std::abs(std::exp(log_psi_f(lam.p, mu.p, theta)) - exact) < 1e-12 * exact + 1e-15);
    });
}

TEST_CASE("floating principal value matches the exact one") {
    const Rat theta(2, 3);
    JackEngine eng(theta);
    const double th = to_double(theta);
    for_each_signature_in_box(4, -3, 3, [&](const Signature& lam) {
        const double exact = to_double(eng.principal(lam));
        const double approx = std::exp(log_principal_f(lam.p, th));
        REQUIRE(std::abs(approx - exact) < 1e-9 * exact);
    });
}

TEST_CASE("floating measure matches the exact measure at desk scale") {
    const Rat theta(1, 2);
    JackEngine eng(theta);
    for_each_signature_in_box(3, -2, 2, [&](const Signature& lam) {
        const DiscreteMeasure exact = measure_from_phi(eng, lam);
        const auto approx = measure_floating(lam, to_double(theta));
        REQUIRE(approx.size() == exact.mass.size());
        for (const auto& [xi, m] : exact.mass) {
            REQUIRE(std::abs(approx.at(xi) - to_double(m)) < 1e-9);
        }
    });
}

TEST_CASE("torus grid is deterministic and on the circle") {
    GridSpec grid;
    grid.roots = 16;
    grid.randoms = 8;
    const auto a = torus_grid(grid);
    const auto b = torus_grid(grid);
    REQUIRE(a.size() == 24);
    REQUIRE(a == b);
    for (const auto& z : a) REQUIRE(std::abs(std::abs(z) - 1.0) < 1e-12);
    grid.seed += 1;
    REQUIRE(torus_grid(grid) != a);
}

TEST_CASE("catalog sequences scale to their limit parameters") {
    const Signature row = row_sequence(Rat(1, 2)).gen(10);
    REQUIRE(row.p == Parts{5, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    const Signature col = column_sequence(Rat(1, 2)).gen(6);
    REQUIRE(col.p == Parts{1, 1, 1, 0, 0, 0});
    const Signature mix = mixed_sequence(Rat(1, 2), Rat(1, 3)).gen(6);
    REQUIRE(mix.p == Parts{3, 0, 0, 0, 0, -2});
    const Signature stairs = staircase_sequence(Rat(1)).gen(9);
    REQUIRE(stairs.weight() == 9);
    REQUIRE(stairs.p[0] == 3);
    REQUIRE(zero_sequence().gen(4).weight() == 0);
}

TEST_CASE("extraction recovers row, column and mixed parameters exactly") {
    // Richardson kills the 1/n conjugate-side artifact exactly, but the raw
    // fine/coarse residual is itself ~1/n, so n_max must exceed ~2000 before
    // the diagnostic reports convergence.
    const auto row = vk_extract(row_sequence(Rat(1, 2)), 4, 2048);
    REQUIRE(row.params.plus.alpha == std::vector<Rat>{Rat(1, 2)});
    REQUIRE(row.params.plus.beta.empty());
    REQUIRE(row.params.plus.gamma == 0);
    REQUIRE(row.params.minus.alpha.empty());
    REQUIRE(row.diag.converged);
    REQUIRE(row.diag.max_residual < 1e-3);

    const auto col = vk_extract(column_sequence(Rat(1, 2)), 4, 2048);
    REQUIRE(col.params.plus.beta == std::vector<Rat>{Rat(1, 2)});
    REQUIRE(col.params.plus.alpha.empty());
    REQUIRE(col.diag.converged);

    const auto mix = vk_extract(mixed_sequence(Rat(1, 2), Rat(1, 4)), 4, 2048);
    REQUIRE(mix.params.plus.alpha == std::vector<Rat>{Rat(1, 2)});
    REQUIRE(mix.params.minus.alpha == std::vector<Rat>{Rat(1, 4)});
    REQUIRE(mix.params.plus.beta.empty());
    REQUIRE(mix.params.minus.beta.empty());
    REQUIRE(mix.diag.converged);

    const auto full_row = vk_extract(row_sequence(Rat(1)), 4, 2048);
    REQUIRE(full_row.params.plus.alpha == std::vector<Rat>{Rat(1)});
    const auto full_col = vk_extract(column_sequence(Rat(1)), 4, 2048);
    REQUIRE(full_col.params.plus.beta == std::vector<Rat>{Rat(1)});
}

TEST_CASE("extraction at small n reports the unconverged residual") {
    const auto row = vk_extract(row_sequence(Rat(1, 2)), 4, 96);
    REQUIRE(row.params.plus.alpha == std::vector<Rat>{Rat(1, 2)});
    REQUIRE_FALSE(row.diag.converged);
    REQUIRE(row.diag.max_residual == Catch::Approx(1.0 / 96));
    REQUIRE_THROWS_AS(vk_extract(row_sequence(Rat(1, 2)), 0, 96), validation_error);
    REQUIRE_THROWS_AS(vk_extract(row_sequence(Rat(1, 2)), 4, 4), validation_error);
}

TEST_CASE("staircase extraction pushes everything into gamma") {
    const auto ext = vk_extract(staircase_sequence(Rat(1)), 4, 1000000);
    REQUIRE(ext.diag.converged);
    REQUIRE(std::abs(to_double(ext.params.plus.gamma) - 1.0) < 0.01);
    for (const Rat& a : ext.params.plus.alpha) REQUIRE(to_double(a) < 2e-3);
    for (const Rat& b : ext.params.plus.beta) REQUIRE(to_double(b) < 2e-3);
    REQUIRE(ext.params.minus.alpha.empty());
}

TEST_CASE("zero sequence experiment is exact at every n") {
    GridSpec grid;
    grid.roots = 12;
    grid.randoms = 4;
    const auto table = convergence_experiment(zero_sequence(), Rat(1, 2), 1, grid, {8, 16}, 4);
    REQUIRE(table.rows.size() == 2);
    for (const auto& row : table.rows) {
        REQUIRE(row.sup_error < 1e-12);
        for (const Rat& e : row.moment_error) REQUIRE(e == 0);
    }
}

TEST_CASE("row experiment error shrinks with n") {
    GridSpec grid;
    grid.roots = 16;
    grid.randoms = 8;
    const auto table =
        convergence_experiment(row_sequence(Rat(1, 2)), Rat(1, 2), 1, grid, {16, 64}, 4);
    REQUIRE(table.rows.size() == 2);
    REQUIRE(table.rows[1].sup_error < table.rows[0].sup_error);
    REQUIRE(table.rows[1].sup_error < 0.2);
    for (size_t k = 0; k < 4; ++k) {
        REQUIRE(table.rows[1].moment_error[k] <= table.rows[0].moment_error[k]);
    }
}

TEST_CASE("column moment errors vanish identically at even n") {
    GridSpec grid;
    grid.roots = 8;
    grid.randoms = 4;
    const auto table =
        convergence_experiment(column_sequence(Rat(1, 2)), Rat(2), 1, grid, {16, 32}, 4);
    for (const auto& row : table.rows) {
        REQUIRE(row.sup_error < 1e-12);
        for (const Rat& e : row.moment_error) REQUIRE(e == 0);
    }
}

TEST_CASE("multi-point experiment runs on the exact path") {
    GridSpec grid;
    grid.roots = 4;
    grid.randoms = 4;
    const auto table =
        convergence_experiment(row_sequence(Rat(1, 2)), Rat(1), 2, grid, {4, 8}, 2);
    REQUIRE(table.rows.size() == 2);
    for (const auto& row : table.rows) REQUIRE(std::isfinite(row.sup_error));
    REQUIRE_THROWS_AS(
        convergence_experiment(row_sequence(Rat(1, 2)), Rat(1), 2, grid, {64}, 2),
        validation_error);
}

TEST_CASE("experiment rows follow the sorted n list") {
    GridSpec grid;
    grid.roots = 4;
    grid.randoms = 0;
    const auto table =
        convergence_experiment(zero_sequence(), Rat(1), 1, grid, {32, 8, 8, 16}, 2);
    REQUIRE(table.rows.size() == 3);
    REQUIRE(table.rows[0].n == 8);
    REQUIRE(table.rows[1].n == 16);
    REQUIRE(table.rows[2].n == 32);
}

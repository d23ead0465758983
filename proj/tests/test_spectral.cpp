#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "splitsolve/spectral.hpp"

using namespace splitsolve;

TEST_CASE("spectral radius of gram operators") {
    SECTION("identity") {
        const auto est = spectral_radius_gram(DenseOperator::identity(3));
        CHECK(est.converged);
        CHECK(est.value == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("scalar 4 -> 16") {
        const auto est = spectral_radius_gram(DenseOperator::scalar(4.0));
        CHECK(est.converged);
        CHECK(est.value == Catch::Approx(16.0).margin(1e-10));
    }
    SECTION("diag(1,2,3) -> 9") {
        const auto est = spectral_radius_gram(
            DenseOperator::from_rows({{1.0, 0.0, 0.0}, {0.0, 2.0, 0.0}, {0.0, 0.0, 3.0}}));
        CHECK(est.converged);
        CHECK(est.value == Catch::Approx(9.0).margin(1e-9));
    }
    SECTION("zero operator") {
        const auto est = spectral_radius_gram(DenseOperator::zero(2, 3));
        CHECK(est.converged);
        CHECK(est.value == 0.0);
    }
    SECTION("deterministic for a fixed seed") {
        const DenseOperator op = DenseOperator::from_rows({{1.0, 2.0}, {0.5, -1.0}});
        const auto a = spectral_radius_gram(op, 1e-12, 10000, 123);
        const auto b = spectral_radius_gram(op, 1e-12, 10000, 123);
        CHECK(a.value == b.value);
        CHECK(a.iterations_used == b.iterations_used);
    }
}

TEST_CASE("power iteration agrees with the dense Jacobi oracle") {
    std::mt19937_64 rng(20240817);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> dims(1, 6);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = dims(rng);
        const std::size_t cols = dims(rng);
        std::vector<double> entries(rows * cols);
        for (double& e : entries) e = gauss(rng);
        const double expected = oracles::gram_spectral_radius(entries, rows, cols);
        const auto est =
            spectral_radius_gram(DenseOperator(rows, cols, std::move(entries)), 1e-13, 20000, 42);
        REQUIRE(est.converged);
        CHECK(est.value == Catch::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("rayleigh quotient lower-bound consistency") {
    const DenseOperator op = DenseOperator::from_rows({{2.0, 1.0}, {0.0, 1.5}, {1.0, -1.0}});
    const auto est = spectral_radius_gram(op);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        Point x{gauss(rng), gauss(rng)};
        if (norm(x) == 0.0) continue;
        const double q = inner(op.apply(x), op.apply(x)) / inner(x, x);
        CHECK(est.value >= q - 2.0 * est.tolerance);
    }
}

TEST_CASE("step size bound") {
    CHECK(step_size_bound(1.0, 1.0) == 1.0);
    CHECK(step_size_bound(1.0, 16.0) == Catch::Approx(2.0 / 17.0).margin(1e-15));
    CHECK(step_size_bound(0.0, 2.0) == 1.0);
    CHECK_THROWS_AS(step_size_bound(0.0, 0.0), ConfigError);
    CHECK_THROWS_AS(step_size_bound(-2.0, 1.0), ConfigError);
}

TEST_CASE("product-form step size bound") {
    CHECK(step_size_bound_product(1.0, 16.0) == Catch::Approx(0.125).margin(1e-15));
    CHECK(step_size_bound_product(2.0, 1.0) == 1.0);
    CHECK_THROWS_AS(step_size_bound_product(0.0, 2.0), ConfigError);
}

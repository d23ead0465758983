#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "splitsolve/point.hpp"

using namespace splitsolve;

TEST_CASE("inner product basics") {
    CHECK(inner(Point{1.0, 0.0}, Point{0.0, 1.0}) == 0.0);
    CHECK(inner(Point{3.0, 4.0}, Point{3.0, 4.0}) == 25.0);
    CHECK(inner(Point{2.0}, Point{3.0}) == 6.0);
}

TEST_CASE("inner product is symmetric and bilinear") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> ac(4), bc(4), cc(4);
        for (int i = 0; i < 4; ++i) ac[i] = dist(rng), bc[i] = dist(rng), cc[i] = dist(rng);
        const Point a{ac}, b{bc}, c{cc};
        const double s = dist(rng);
        CHECK(inner(a, b) == Catch::Approx(inner(b, a)).margin(1e-12));
        CHECK(inner(a + b, c) == Catch::Approx(inner(a, c) + inner(b, c)).margin(1e-9));
        CHECK(inner(s * a, b) == Catch::Approx(s * inner(a, b)).margin(1e-9));
    }
}

TEST_CASE("norm") {
    CHECK(norm(Point{0.0, 0.0, 0.0}) == 0.0);
    CHECK(norm(Point{3.0, 4.0}) == 5.0);
    CHECK(norm(Point{1.0, 1.0, 1.0, 1.0}) == 2.0);
}

TEST_CASE("dimension mismatch names both dims") {
    CHECK_THROWS_WITH(inner(Point{1.0, 2.0}, Point{1.0}),
                      Catch::Matchers::ContainsSubstring("2") &&
                          Catch::Matchers::ContainsSubstring("1"));
    CHECK_THROWS_AS((Point{1.0} + Point{1.0, 2.0}), DimensionError);
}

TEST_CASE("non-finite coordinates are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Point{nan}, NumericError);
    CHECK_THROWS_AS((Point{1.0, inf}), NumericError);
    // arithmetic producing overflow aborts rather than propagating
    const Point big{1e308};
    CHECK_THROWS_AS(big + big, NumericError);
    CHECK_THROWS_AS(2.0 * big, NumericError);
}

TEST_CASE("relax endpoints") {
    const Point a{1.0, 2.0}, b{3.0, -2.0};
    CHECK(distance(relax(a, b, 0.0), a) == 0.0);
    CHECK(distance(relax(a, b, 1.0), b) == 0.0);
    CHECK(distance(relax(a, b, 0.5), Point{2.0, 0.0}) == 0.0);
}

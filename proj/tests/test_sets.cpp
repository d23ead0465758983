#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "splitsolve/sets.hpp"

using namespace splitsolve;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<ConvexSet> all_variants_2d() {
    return {
        ConvexSet::whole_space(2),
        ConvexSet::nonnegative_orthant(2),
        ConvexSet::box({-1.0, 0.0}, {2.0, kInf}),
        ConvexSet::ball(Point{0.5, -0.5}, 2.0),
        ConvexSet::half_space(Point{1.0, 1.0}, 1.0),
        ConvexSet::affine_subspace(DenseOperator::from_rows({{1.0}, {2.0}}), Point{0.0, 1.0}),
    };
}

}  // namespace

TEST_CASE("projection examples") {
    CHECK(distance(ConvexSet::nonnegative_orthant(2).project(Point{-1.0, 2.0}),
                   Point{0.0, 2.0}) == 0.0);
    CHECK(distance(ConvexSet::ball(Point{0.0, 0.0}, 1.0).project(Point{3.0, 4.0}),
                   Point{0.6, 0.8}) < 1e-15);
    CHECK(distance(ConvexSet::whole_space(3).project(Point{1.0, -7.0, 2.5}),
                   Point{1.0, -7.0, 2.5}) == 0.0);
}

TEST_CASE("projection onto a half space") {
    const ConvexSet h = ConvexSet::half_space(Point{0.0, 1.0}, 2.0);  // y <= 2
    CHECK(distance(h.project(Point{5.0, 1.0}), Point{5.0, 1.0}) == 0.0);
    CHECK(distance(h.project(Point{5.0, 7.0}), Point{5.0, 2.0}) < 1e-15);
}

TEST_CASE("projection onto an affine subspace") {
    // line { t*(1,1) } in R^2: projection averages the coordinates
    const ConvexSet line =
        ConvexSet::affine_subspace(DenseOperator::from_rows({{1.0}, {1.0}}), Point{0.0, 0.0});
    CHECK(distance(line.project(Point{2.0, 0.0}), Point{1.0, 1.0}) < 1e-14);
    // member point maps to itself
    CHECK(distance(line.project(Point{3.0, 3.0}), Point{3.0, 3.0}) < 1e-14);
}

TEST_CASE("projection is idempotent and lands in the set") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (const ConvexSet& set : all_variants_2d()) {
        INFO("variant: " << set.kind_name());
        for (int trial = 0; trial < 200; ++trial) {
            const Point x{dist(rng), dist(rng)};
            const Point px = set.project(x);
            CHECK(set.contains(px, 1e-12));
            CHECK(distance(set.project(px), px) <= 1e-12);
        }
    }
}

TEST_CASE("projection is nonexpansive") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (const ConvexSet& set : all_variants_2d()) {
        INFO("variant: " << set.kind_name());
        for (int trial = 0; trial < 200; ++trial) {
            const Point x{dist(rng), dist(rng)};
            const Point y{dist(rng), dist(rng)};
            CHECK(distance(set.project(x), set.project(y)) <= distance(x, y) + 1e-12);
        }
    }
}

TEST_CASE("variational characterization of the projection") {
    // <x - Px, c - Px> <= 0 for all c in the set
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (const ConvexSet& set : all_variants_2d()) {
        INFO("variant: " << set.kind_name());
        for (int trial = 0; trial < 50; ++trial) {
            const Point x{dist(rng), dist(rng)};
            const Point px = set.project(x);
            for (int inner_trial = 0; inner_trial < 10; ++inner_trial) {
                const Point c = set.project(Point{dist(rng), dist(rng)});
                CHECK(inner(x - px, c - px) <= 1e-10);
            }
        }
    }
}

TEST_CASE("set construction errors") {
    CHECK_THROWS_AS(ConvexSet::box({1.0}, {0.0}), DomainError);  // empty box
    CHECK_THROWS_AS(ConvexSet::ball(Point{0.0}, 0.0), DomainError);
    CHECK_THROWS_AS(ConvexSet::ball(Point{0.0}, -1.0), DomainError);
    CHECK_THROWS_AS(ConvexSet::half_space(Point{0.0, 0.0}, 1.0), DomainError);
    CHECK_THROWS_AS(ConvexSet::box({0.0, 0.0}, {1.0}), DimensionError);
    // linearly dependent basis columns
    CHECK_THROWS_AS(ConvexSet::affine_subspace(
                        DenseOperator::from_rows({{1.0, 2.0}, {1.0, 2.0}}), Point{0.0, 0.0}),
                    DomainError);
    CHECK_THROWS_AS(ConvexSet::whole_space(2).project(Point{1.0}), DimensionError);
}

TEST_CASE("box projection clamps coordinatewise") {
    const ConvexSet b = ConvexSet::box({-1.0, -kInf}, {1.0, 0.0});
    CHECK(distance(b.project(Point{5.0, -3.0}), Point{1.0, -3.0}) == 0.0);
    CHECK(distance(b.project(Point{-2.0, 3.0}), Point{-1.0, 0.0}) == 0.0);
}

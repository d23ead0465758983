#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "splitsolve/operator.hpp"

using namespace splitsolve;

TEST_CASE("apply") {
    const DenseOperator id2 = DenseOperator::identity(2);
    CHECK(distance(id2.apply(Point{5.0, -2.0}), Point{5.0, -2.0}) == 0.0);

    CHECK(DenseOperator::scalar(1.0).apply(Point{5.0})[0] == 5.0);
    CHECK(DenseOperator::scalar(4.0).apply(Point{1.25})[0] == 5.0);
}

TEST_CASE("apply is linear") {
    const DenseOperator op = DenseOperator::from_rows({{1.0, 2.0, -1.0}, {0.5, 0.0, 3.0}});
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Point x{dist(rng), dist(rng), dist(rng)};
        const Point y{dist(rng), dist(rng), dist(rng)};
        const double s = dist(rng);
        CHECK(distance(op.apply(axpy(x, s, y)), axpy(op.apply(x), s, op.apply(y))) < 1e-12);
    }
}

TEST_CASE("adjoint is the transpose") {
    const DenseOperator op = DenseOperator::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    const DenseOperator t = op.adjoint();
    CHECK(t.at(0, 0) == 1.0);
    CHECK(t.at(0, 1) == 3.0);
    CHECK(t.at(1, 0) == 2.0);
    CHECK(t.at(1, 1) == 4.0);

    CHECK(DenseOperator::scalar(4.0).adjoint().at(0, 0) == 4.0);

    const DenseOperator sym = DenseOperator::from_rows({{2.0, 1.0}, {1.0, 5.0}});
    const DenseOperator symt = sym.adjoint();
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) CHECK(symt.at(i, j) == sym.at(i, j));
    }
}

TEST_CASE("adjoint identity <Ax, v> = <x, A^T v>") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss(0.0, 2.0);
    const auto random_op = [&](std::size_t rows, std::size_t cols) {
        std::vector<double> e(rows * cols);
        for (double& v : e) v = gauss(rng);
        return DenseOperator(rows, cols, std::move(e));
    };
    for (int trial = 0; trial < 100; ++trial) {
        const DenseOperator op = random_op(3, 4);
        std::vector<double> xc(4), vc(3);
        for (double& c : xc) c = gauss(rng);
        for (double& c : vc) c = gauss(rng);
        const Point x{xc}, v{vc};
        const double lhs = inner(op.apply(x), v);
        const double rhs = inner(x, op.apply_adjoint(v));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + norm(x) * norm(v)));
        // adjoint of the adjoint gives back the operator entrywise
        const DenseOperator twice = op.adjoint().adjoint();
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 4; ++j) CHECK(twice.at(i, j) == op.at(i, j));
        }
    }
}

TEST_CASE("operator shape errors") {
    CHECK_THROWS_AS(DenseOperator(2, 2, {1.0, 2.0, 3.0}), DimensionError);
    CHECK_THROWS_AS(DenseOperator::from_rows({{1.0, 2.0}, {3.0}}), DimensionError);
    const DenseOperator op = DenseOperator::from_rows({{1.0, 2.0}});
    CHECK_THROWS_AS(op.apply(Point{1.0, 2.0, 3.0}), DimensionError);
}

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "splitsolve/errors.hpp"
#include "splitsolve/maps.hpp"
#include "splitsolve/operator.hpp"
#include "splitsolve/point.hpp"
#include "splitsolve/problem.hpp"
#include "splitsolve/sets.hpp"

namespace splitsolve {

/// The bundled one-dimensional example: C = Q = [0, inf), A = 1, B = 4,
/// U the rational map with Fix(U) = {5}, T the affine map with Fix(T) =
/// {5/4}, solution (5, 5/4). The quoted step size lambda = 1 sits far outside
/// the admissible interval (0, 2/17); inadmissible_lambda records that, and
/// running the solver with it requires validate_lambda = false.
struct PaperExample {
    SffpepProblem problem;
    double lambda = 1.0;
    double alpha = 1.0 / 5.0;
    double beta = 1.0 / 8.0;
    bool inadmissible_lambda = true;
};

inline PaperExample build_paper_example() {
    const double inf = std::numeric_limits<double>::infinity();
    PaperExample ex{
        SffpepProblem{
            ConvexSet::box({0.0}, {inf}),
            ConvexSet::box({0.0}, {inf}),
            QuasiNonexpansiveMap::rational().with_fixed_point(Point{5.0}),
            QuasiNonexpansiveMap::affine_shrink().with_fixed_point(Point{1.25}),
            DenseOperator::scalar(1.0),
            DenseOperator::scalar(4.0),
            std::make_pair(Point{5.0}, Point{1.25}),
        },
    };
    validate_problem(ex.problem);
    return ex;
}

/// One step of the example's decoupled reference recurrence, exactly as the
/// reference tables tabulate it:
///
///   z = x                                u = y
///   w = (7/8) z + (1/8) (z^2+5)/(z+1)    r = (7/8) u + (1/8) (u+5)/5
///   x+ = (4/5) z + (1/5) (w^2+5)/(w+1)   y+ = (4/5) u + (1/5) (r+5)/5
///
/// This is what the golden tables record; it corresponds to the general
/// iteration with the coupling term dropped (lambda = 0), not to the quoted
/// lambda = 1, and is kept separate from the solver for exactly that reason.
inline std::pair<double, double> paper_recurrence_step(double x, double y) {
    if (x < 0.0) {
        throw DomainError("paper_recurrence_step: x = " + std::to_string(x) +
                          " outside domain [0, inf)");
    }
    const auto rational = [](double v) { return (v * v + 5.0) / (1.0 + v); };
    const auto affine = [](double v) { return (v + 5.0) / 5.0; };

    const double z = x;
    const double w = (7.0 / 8.0) * z + (1.0 / 8.0) * rational(z);
    const double x_next = (4.0 / 5.0) * z + (1.0 / 5.0) * rational(w);
    const double u = y;
    const double r = (7.0 / 8.0) * u + (1.0 / 8.0) * affine(u);
    const double y_next = (4.0 / 5.0) * u + (1.0 / 5.0) * affine(r);
    if (!std::isfinite(x_next) || !std::isfinite(y_next)) {
        throw NumericError("paper_recurrence_step: non-finite iterate");
    }
    return {x_next, y_next};
}

struct RecurrenceRow {
    std::size_t n;
    double x;
    double y;
};

/// Iterate the reference recurrence; row 0 is the start, rows 1..n_steps the
/// iterates.
inline std::vector<RecurrenceRow> paper_recurrence_run(double x0, double y0,
                                                       std::size_t n_steps) {
    std::vector<RecurrenceRow> rows;
    rows.reserve(n_steps + 1);
    rows.push_back({0, x0, y0});
    double x = x0, y = y0;
    for (std::size_t n = 1; n <= n_steps; ++n) {
        std::tie(x, y) = paper_recurrence_step(x, y);
        rows.push_back({n, x, y});
    }
    return rows;
}

/// Recipe for a random instance with a known solution.
struct SyntheticSpec {
    std::size_t n1 = 5;
    std::size_t n2 = 5;
    std::size_t n3 = 5;
    std::uint64_t seed = 42;
    double conditioning = 10.0;    // target sigma_max / sigma_min of A
    double contraction_rho = 0.5;  // ratio of the ContractionToward maps
};

namespace detail {

/// Random matrix with orthonormal columns via Gram-Schmidt on a Gaussian
/// draw (rows x cols, cols <= rows).
inline std::vector<std::vector<double>> random_orthonormal_columns(std::size_t rows,
                                                                   std::size_t cols,
                                                                   std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> q(cols, std::vector<double>(rows));
    for (std::size_t c = 0; c < cols; ++c) {
        for (;;) {
            for (std::size_t i = 0; i < rows; ++i) q[c][i] = gauss(rng);
            for (std::size_t prev = 0; prev < c; ++prev) {
                double dot = 0.0;
                for (std::size_t i = 0; i < rows; ++i) dot += q[c][i] * q[prev][i];
                for (std::size_t i = 0; i < rows; ++i) q[c][i] -= dot * q[prev][i];
            }
            double nn = 0.0;
            for (double v : q[c]) nn += v * v;
            if (nn > 1e-12) {
                const double inv = 1.0 / std::sqrt(nn);
                for (double& v : q[c]) v *= inv;
                break;
            }
        }
    }
    return q;  // q[c][i]: column c, row i
}

}  // namespace detail

/// Seeded construction of an instance whose hypotheses hold by construction:
/// x* and y* strictly positive, C = Q = the nonnegative orthant, A built with
/// the target conditioning, B rank-one corrected so that B y* = A x*
/// exactly, and ContractionToward maps anchored at the solution.
inline SffpepProblem generate_synthetic(const SyntheticSpec& spec) {
    if (spec.n1 < 1 || spec.n2 < 1 || spec.n3 < 1) {
        throw ConfigError("generate_synthetic: dimensions must be >= 1");
    }
    if (!(spec.conditioning >= 1.0)) {
        throw ConfigError("generate_synthetic: conditioning must be >= 1");
    }
    if (!(spec.contraction_rho >= 0.0 && spec.contraction_rho < 1.0)) {
        throw ConfigError("generate_synthetic: contraction_rho must lie in [0,1)");
    }
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> interior(0.5, 2.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<double> xs(spec.n1), ys(spec.n2);
    for (double& v : xs) v = interior(rng);
    for (double& v : ys) v = interior(rng);
    const Point x_star{std::move(xs)};
    const Point y_star{std::move(ys)};

    // A = sum_k s_k u_k v_k^T with singular values spanning the target ratio.
    const std::size_t k = std::min(spec.n1, spec.n3);
    const auto u_cols = detail::random_orthonormal_columns(spec.n3, k, rng);
    const auto v_cols = detail::random_orthonormal_columns(spec.n1, k, rng);
    std::vector<double> a_entries(spec.n3 * spec.n1, 0.0);
    for (std::size_t s = 0; s < k; ++s) {
        const double sigma =
            k == 1 ? 1.0 : std::pow(spec.conditioning, -static_cast<double>(s) / (k - 1));
        for (std::size_t i = 0; i < spec.n3; ++i) {
            for (std::size_t j = 0; j < spec.n1; ++j) {
                a_entries[i * spec.n1 + j] += sigma * u_cols[s][i] * v_cols[s][j];
            }
        }
    }
    DenseOperator A(spec.n3, spec.n1, std::move(a_entries));

    // B = B0 + (A x* - B0 y*) y*^T / ||y*||^2 makes B y* = A x* hold.
    std::vector<double> b_entries(spec.n3 * spec.n2);
    for (double& v : b_entries) v = gauss(rng);
    DenseOperator B0(spec.n3, spec.n2, std::move(b_entries));
    const Point ax = A.apply(x_star);
    const Point b0y = B0.apply(y_star);
    const double y_norm_sq = inner(y_star, y_star);
    if (y_norm_sq == 0.0) throw ConfigError("generate_synthetic: y* must be nonzero");
    std::vector<double> corrected(spec.n3 * spec.n2);
    for (std::size_t i = 0; i < spec.n3; ++i) {
        for (std::size_t j = 0; j < spec.n2; ++j) {
            corrected[i * spec.n2 + j] =
                B0.at(i, j) + (ax[i] - b0y[i]) * y_star[j] / y_norm_sq;
        }
    }
    DenseOperator B(spec.n3, spec.n2, std::move(corrected));

    SffpepProblem p{
        ConvexSet::nonnegative_orthant(spec.n1),
        ConvexSet::nonnegative_orthant(spec.n2),
        QuasiNonexpansiveMap::contraction_toward(x_star, spec.contraction_rho),
        QuasiNonexpansiveMap::contraction_toward(y_star, spec.contraction_rho),
        std::move(A),
        std::move(B),
        std::make_pair(x_star, y_star),
    };
    validate_problem(p);
    return p;
}

}  // namespace splitsolve

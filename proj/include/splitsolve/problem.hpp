#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitsolve/errors.hpp"
#include "splitsolve/maps.hpp"
#include "splitsolve/operator.hpp"
#include "splitsolve/point.hpp"
#include "splitsolve/schedule.hpp"
#include "splitsolve/sets.hpp"
#include "splitsolve/spectral.hpp"

namespace splitsolve {

/// Data for the split feasibility and fixed-point equality problem:
/// find x in C with Ux = x and y in Q with Ty = y such that Ax = By.
/// C lives in R^{n1}, Q in R^{n2}; A: R^{n1} -> R^{n3}, B: R^{n2} -> R^{n3}.
struct SffpepProblem {
    ConvexSet C;
    ConvexSet Q;
    QuasiNonexpansiveMap U;
    QuasiNonexpansiveMap T;
    DenseOperator A;
    DenseOperator B;
    std::optional<std::pair<Point, Point>> known_solution;

    std::size_t dim_x() const { return A.domain_dim(); }
    std::size_t dim_y() const { return B.domain_dim(); }
};

/// Structural validation: operator shapes agree with the sets, and a declared
/// solution actually solves the problem (membership, fixedness, coupling).
inline void validate_problem(const SffpepProblem& p, double tol = 1e-10) {
    require_same_dim(p.A.codomain_dim(), p.B.codomain_dim(), "problem: A and B codomains");
    require_same_dim(p.C.dim(), p.A.domain_dim(), "problem: C vs domain of A");
    require_same_dim(p.Q.dim(), p.B.domain_dim(), "problem: Q vs domain of B");
    if (p.known_solution) {
        const auto& [xs, ys] = *p.known_solution;
        require_same_dim(xs.dim(), p.A.domain_dim(), "problem: x* vs domain of A");
        require_same_dim(ys.dim(), p.B.domain_dim(), "problem: y* vs domain of B");
        if (!p.C.contains(xs, tol)) throw DomainError("known solution: x* lies outside C");
        if (!p.Q.contains(ys, tol)) throw DomainError("known solution: y* lies outside Q");
        if (distance(p.U.apply(xs), xs) > tol) {
            throw DomainError("known solution: x* is not a fixed point of U");
        }
        if (distance(p.T.apply(ys), ys) > tol) {
            throw DomainError("known solution: y* is not a fixed point of T");
        }
        if (distance(p.A.apply(xs), p.B.apply(ys)) > tol) {
            throw DomainError("known solution: A x* != B y*");
        }
    }
}

/// Per-iteration state. z, w are the x-side intermediates and u, r the
/// y-side intermediates of the step that produced this state.
struct IterateState {
    std::size_t n = 1;
    Point x, y, z, w, u, r;

    static IterateState initial(Point x0, Point y0) {
        IterateState s;
        s.n = 1;
        s.z = s.w = s.x = std::move(x0);
        s.u = s.r = s.y = std::move(y0);
        return s;
    }
};

struct TraceRecord {
    std::size_t n = 0;
    double coupling_residual = 0.0;  // ||A x_n - B y_n||
    double fix_residual_U = 0.0;     // ||U z_n - z_n||
    double fix_residual_T = 0.0;     // ||T u_n - u_n||
    std::optional<double> lyapunov;  // ||x_n - x*||^2 + ||y_n - y*||^2
    Point x_snapshot, y_snapshot;

    double composite() const {
        return std::max(coupling_residual, std::max(fix_residual_U, fix_residual_T));
    }
};

enum class Termination { ResidualTolMet, MaxIters, NumericError };

inline const char* termination_name(Termination t) {
    switch (t) {
        case Termination::ResidualTolMet: return "residual-tol-met";
        case Termination::MaxIters: return "max-iters";
        case Termination::NumericError: return "numeric-error";
    }
    return "?";
}

struct SolveResult {
    IterateState final;
    std::vector<TraceRecord> trace;
    Termination termination = Termination::MaxIters;
    std::size_t iterations = 0;
    std::string error_message;  // set when termination == NumericError
};

struct SolverParams {
    Schedule lambda = Schedule::constant(0.0);
    Schedule alpha = Schedule::constant(0.5);
    Schedule beta = Schedule::constant(0.5);
    std::size_t max_iters = 100000;
    double residual_tol = 1e-8;
    bool validate_lambda = true;
};

/// Safe parameter constructor: estimates L1 = rho(A^T A) and L2 = rho(B^T B),
/// then sets lambda = lambda_fraction * 2/(L1+L2) with the bound recorded on
/// the schedule. lambda_fraction must be strictly inside (0,1) because the
/// step-size interval is open.
inline SolverParams make_params(const SffpepProblem& p, double lambda_fraction, double alpha,
                                double beta, std::size_t max_iters = 100000,
                                double tol = 1e-8, double spectral_tol = 1e-12,
                                int spectral_max_iters = 10000, std::uint64_t seed = 42) {
    if (!(lambda_fraction > 0.0 && lambda_fraction < 1.0)) {
        throw ConfigError("make_params: lambda_fraction must lie in (0,1)");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("make_params: alpha must lie in (0,1)");
    if (!(beta > 0.0 && beta < 1.0)) throw ConfigError("make_params: beta must lie in (0,1)");
    const SpectralEstimate l1 = spectral_radius_gram(p.A, spectral_tol, spectral_max_iters, seed);
    const SpectralEstimate l2 = spectral_radius_gram(p.B, spectral_tol, spectral_max_iters, seed);
    if (!l1.converged || !l2.converged) {
        throw NumericError("make_params: spectral radius estimation did not converge");
    }
    const double bound = step_size_bound(l1.value, l2.value);
    SolverParams params;
    params.lambda = Schedule::constant(lambda_fraction * bound).with_bounds(0.0, bound);
    params.alpha = Schedule::constant(alpha).with_bounds(0.0, 1.0);
    params.beta = Schedule::constant(beta).with_bounds(0.0, 1.0);
    params.max_iters = max_iters;
    params.residual_tol = tol;
    return params;
}

}  // namespace splitsolve

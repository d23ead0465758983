#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "splitsolve/errors.hpp"
#include "splitsolve/operator.hpp"
#include "splitsolve/point.hpp"

namespace splitsolve {

/// Result of estimating the spectral radius of a Gram operator A^T A.
struct SpectralEstimate {
    double value = 0.0;
    int iterations_used = 0;
    bool converged = false;
    double tolerance = 0.0;
};

/// Largest eigenvalue of op^T op by power iteration from a seeded random
/// start. Deterministic for a fixed seed. Convergence is declared when two
/// successive Rayleigh quotients differ by less than tol (relative to the
/// current magnitude); a zero operator reports value 0 and converged=true.
inline SpectralEstimate spectral_radius_gram(const DenseOperator& op, double tol = 1e-12,
                                             int max_iters = 10000, std::uint64_t seed = 42) {
    if (tol <= 0.0) throw ConfigError("spectral_radius_gram: tol must be positive");
    SpectralEstimate est;
    est.tolerance = tol;
    if (op.is_zero()) {
        est.converged = true;
        return est;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> start(op.domain_dim());
    for (double& c : start) c = unit(rng);
    Point v{std::move(start)};
    double nv = norm(v);
    if (nv == 0.0) v = Point::constant(op.domain_dim(), 1.0), nv = norm(v);
    v = (1.0 / nv) * v;

    double rayleigh = 0.0;
    for (int k = 1; k <= max_iters; ++k) {
        const Point gv = op.apply_adjoint(op.apply(v));
        const double next = inner(v, gv);  // v is unit, so this is the Rayleigh quotient
        est.iterations_used = k;
        if (k > 1 && std::abs(next - rayleigh) < tol * std::max(1.0, std::abs(next))) {
            rayleigh = next;
            est.converged = true;
            break;
        }
        rayleigh = next;
        const double ng = norm(gv);
        if (ng == 0.0) {
            // Start vector fell in the null space; the Rayleigh quotient is exact there.
            est.converged = true;
            break;
        }
        v = (1.0 / ng) * gv;
    }
    est.value = std::max(0.0, rayleigh);
    return est;
}

/// Exclusive upper bound 2/(L1+L2) for the admissible step size.
inline double step_size_bound(double l1, double l2) {
    if (!(l1 + l2 > 0.0)) {
        throw ConfigError("step_size_bound: L1+L2 must be positive");
    }
    return 2.0 / (l1 + l2);
}

/// Alternative product-form bound 2/(L1*L2) quoted for the simultaneous
/// fixed-point scheme. The sum form above is the default everywhere; this is
/// exposed for callers who want the product interval instead.
inline double step_size_bound_product(double l1, double l2) {
    if (!(l1 * l2 > 0.0)) {
        throw ConfigError("step_size_bound_product: L1*L2 must be positive");
    }
    return 2.0 / (l1 * l2);
}

}  // namespace splitsolve

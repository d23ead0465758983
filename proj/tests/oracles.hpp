// Test-only oracles, deliberately independent of the library's own
// implementation paths.
#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace oracles {

/// Eigenvalues of a symmetric n x n matrix (row-major) by cyclic Jacobi
/// sweeps. Intended for n <= 8; brute-force but exact to machine precision.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    const auto off_diag_sq = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
        }
        return s;
    };
    for (int sweep = 0; sweep < 100 && off_diag_sq() > 1e-28; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    return eig;
}

/// Largest eigenvalue of M^T M for a rows x cols row-major matrix.
inline double gram_spectral_radius(const std::vector<double>& m, std::size_t rows,
                                   std::size_t cols) {
    std::vector<double> gram(cols * cols, 0.0);
    for (std::size_t a = 0; a < cols; ++a) {
        for (std::size_t b = 0; b < cols; ++b) {
            double sum = 0.0;
            for (std::size_t i = 0; i < rows; ++i) sum += m[i * cols + a] * m[i * cols + b];
            gram[a * cols + b] = sum;
        }
    }
    double best = 0.0;
    for (double e : jacobi_eigenvalues(std::move(gram), cols)) best = std::max(best, e);
    return best;
}

/// Scalar transliteration of the double-relaxation scheme for the bundled
/// one-dimensional example (C = Q = [0, inf), A = 1, B = 4). Used to
/// cross-check the general solver on the example problem.
struct ScalarExampleOracle {
    double lambda, alpha, beta;

    static double rational(double v) { return (v * v + 5.0) / (1.0 + v); }
    static double affine(double v) { return (v + 5.0) / 5.0; }
    static double clamp0(double v) { return v < 0.0 ? 0.0 : v; }

    std::pair<double, double> step(double x, double y) const {
        const double d = x - 4.0 * y;
        const double z = clamp0(x - lambda * d);
        const double w = (1.0 - beta) * z + beta * rational(z);
        const double xn = (1.0 - alpha) * z + alpha * rational(w);
        const double u = clamp0(y + lambda * 4.0 * d);
        const double r = (1.0 - beta) * u + beta * affine(u);
        const double yn = (1.0 - alpha) * u + alpha * affine(r);
        return {xn, yn};
    }
};

}  // namespace oracles

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "splitsolve/errors.hpp"
#include "splitsolve/maps.hpp"
#include "splitsolve/operator.hpp"
#include "splitsolve/point.hpp"
#include "splitsolve/problem.hpp"
#include "splitsolve/sets.hpp"

namespace splitsolve {

/// ||Ax - By||, the coupling residual both sequences drive to zero.
inline double coupling_residual(const DenseOperator& A, const DenseOperator& B, const Point& x,
                                const Point& y) {
    require_same_dim(A.codomain_dim(), B.codomain_dim(), "coupling_residual");
    return distance(A.apply(x), B.apply(y));
}

/// ||m(x) - x||.
inline double fixed_point_residual(const QuasiNonexpansiveMap& m, const Point& x) {
    return distance(m.apply(x), x);
}

/// ||x - x*||^2 + ||y - y*||^2, the Lyapunov value monitored by the solver.
inline double lyapunov_value(const Point& x, const Point& y, const Point& x_star,
                             const Point& y_star) {
    const Point dx = x - x_star;
    const Point dy = y - y_star;
    return inner(dx, dx) + inner(dy, dy);
}

struct LyapunovTrace {
    std::vector<double> values;
    bool monotone = true;
    std::optional<std::size_t> first_violation;  // index k with values[k+1] > values[k] + slack
    double slack = 0.0;
};

/// Scan a solve trace for Lyapunov monotonicity up to the given slack.
/// Every record must carry a lyapunov value.
inline LyapunovTrace check_lyapunov(const std::vector<TraceRecord>& trace, double slack) {
    LyapunovTrace out;
    out.slack = slack;
    out.values.reserve(trace.size());
    for (const TraceRecord& rec : trace) {
        if (!rec.lyapunov) {
            throw ConfigError("check_lyapunov: record " + std::to_string(rec.n) +
                              " has no lyapunov value (no known solution?)");
        }
        out.values.push_back(*rec.lyapunov);
    }
    for (std::size_t k = 0; k + 1 < out.values.size(); ++k) {
        if (out.values[k + 1] > out.values[k] + slack) {
            out.monotone = false;
            out.first_violation = k;
            break;
        }
    }
    return out;
}

enum class PropertyKind {
    QuasiNonexpansive,
    FirmlyQuasiNonexpansive,
    ProjectionNonexpansive,
    FixedPointConsistent
};

inline const char* property_name(PropertyKind k) {
    switch (k) {
        case PropertyKind::QuasiNonexpansive: return "quasi-nonexpansive";
        case PropertyKind::FirmlyQuasiNonexpansive: return "firmly-quasi-nonexpansive";
        case PropertyKind::ProjectionNonexpansive: return "projection-nonexpansive";
        case PropertyKind::FixedPointConsistent: return "fixed-point-consistent";
    }
    return "?";
}

struct PropertyViolation {
    std::size_t sample_index = 0;
    std::vector<Point> witness;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // lhs - rhs, positive for a violation
    std::string note;
};

/// Outcome of a sampling-based certification. passed iff no violations.
/// Reports are reproducible: the seed and the witnesses are stored, and every
/// witness re-evaluates to a violation when replayed.
struct PropertyCheckReport {
    PropertyKind property = PropertyKind::QuasiNonexpansive;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::vector<PropertyViolation> violations;
    bool passed = true;
};

/// Uniform sampler over a per-coordinate box.
class BoxSampler {
public:
    BoxSampler(std::vector<double> lo, std::vector<double> hi)
        : lo_(std::move(lo)), hi_(std::move(hi)) {
        require_same_dim(lo_.size(), hi_.size(), "BoxSampler");
        for (std::size_t i = 0; i < lo_.size(); ++i) {
            if (!(lo_[i] <= hi_[i])) throw ConfigError("BoxSampler: lo > hi");
        }
    }

    static BoxSampler cube(std::size_t dim, double lo, double hi) {
        return BoxSampler(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
    }

    std::size_t dim() const { return lo_.size(); }

    Point sample(std::mt19937_64& rng) const {
        std::vector<double> out(lo_.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::uniform_real_distribution<double> dist(lo_[i], hi_[i]);
            out[i] = dist(rng);
        }
        return Point(std::move(out));
    }

private:
    std::vector<double> lo_, hi_;
};

using MapFn = std::function<Point(const Point&)>;

namespace detail {

inline std::optional<PropertyCheckReport> fixed_point_precheck(const MapFn& map, const Point& q,
                                                               std::uint64_t seed, double tol) {
    const Point image = map(q);
    if (distance(image, q) > tol) {
        PropertyCheckReport report;
        report.property = PropertyKind::FixedPointConsistent;
        report.samples = 1;
        report.seed = seed;
        report.tolerance = tol;
        PropertyViolation v;
        v.witness = {q, image};
        v.lhs = distance(image, q);
        v.rhs = tol;
        v.margin = v.lhs - v.rhs;
        v.note = "claimed fixed point moves under the map";
        report.violations.push_back(std::move(v));
        report.passed = false;
        return report;
    }
    return std::nullopt;
}

}  // namespace detail

/// Certify ||Tx - q|| <= ||x - q|| + tol on sampled x. The claimed fixed
/// point is verified first; if it moves, the report fails as
/// FixedPointConsistent before any sampling.
inline PropertyCheckReport check_quasi_nonexpansive(const MapFn& map, const Point& q,
                                                    const BoxSampler& sampler,
                                                    std::size_t n_samples, std::uint64_t seed,
                                                    double tol = 1e-12) {
    if (auto bad = detail::fixed_point_precheck(map, q, seed, tol)) return *bad;

    PropertyCheckReport report;
    report.property = PropertyKind::QuasiNonexpansive;
    report.samples = n_samples;
    report.seed = seed;
    report.tolerance = tol;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const Point x = sampler.sample(rng);
        const double lhs = distance(map(x), q);
        const double rhs = distance(x, q);
        if (lhs > rhs + tol) {
            PropertyViolation v;
            v.sample_index = i;
            v.witness = {x};
            v.lhs = lhs;
            v.rhs = rhs;
            v.margin = lhs - rhs;
            report.violations.push_back(std::move(v));
        }
    }
    report.passed = report.violations.empty();
    return report;
}

/// Certify the firm inequality ||Tx-q||^2 <= ||x-q||^2 - ||Tx-x||^2 + tol.
inline PropertyCheckReport check_firmly_quasi_nonexpansive(const MapFn& map, const Point& q,
                                                           const BoxSampler& sampler,
                                                           std::size_t n_samples,
                                                           std::uint64_t seed,
                                                           double tol = 1e-12) {
    if (auto bad = detail::fixed_point_precheck(map, q, seed, tol)) return *bad;

    PropertyCheckReport report;
    report.property = PropertyKind::FirmlyQuasiNonexpansive;
    report.samples = n_samples;
    report.seed = seed;
    report.tolerance = tol;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const Point x = sampler.sample(rng);
        const Point tx = map(x);
        const Point dq = x - q;
        const Point dtq = tx - q;
        const Point dtx = tx - x;
        const double lhs = inner(dtq, dtq);
        const double rhs = inner(dq, dq) - inner(dtx, dtx);
        if (lhs > rhs + tol) {
            PropertyViolation v;
            v.sample_index = i;
            v.witness = {x};
            v.lhs = lhs;
            v.rhs = rhs;
            v.margin = lhs - rhs;
            report.violations.push_back(std::move(v));
        }
    }
    report.passed = report.violations.empty();
    return report;
}

/// Certify ||Px - Py|| <= ||x - y|| + tol on sampled pairs.
inline PropertyCheckReport check_projection_nonexpansive(const ConvexSet& set,
                                                         const BoxSampler& sampler,
                                                         std::size_t n_pairs,
                                                         std::uint64_t seed,
                                                         double tol = 1e-12) {
    PropertyCheckReport report;
    report.property = PropertyKind::ProjectionNonexpansive;
    report.samples = n_pairs;
    report.seed = seed;
    report.tolerance = tol;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n_pairs; ++i) {
        const Point x = sampler.sample(rng);
        const Point y = sampler.sample(rng);
        const double lhs = distance(set.project(x), set.project(y));
        const double rhs = distance(x, y);
        if (lhs > rhs + tol) {
            PropertyViolation v;
            v.sample_index = i;
            v.witness = {x, y};
            v.lhs = lhs;
            v.rhs = rhs;
            v.margin = lhs - rhs;
            report.violations.push_back(std::move(v));
        }
    }
    report.passed = report.violations.empty();
    return report;
}

/// Verify that a problem's declared solution solves it: membership in C and
/// Q, fixedness under U and T, and ||Ax* - By*|| <= tol. Failures land in
/// the report instead of throwing.
inline PropertyCheckReport check_problem_consistency(const SffpepProblem& p,
                                                     double tol = 1e-10) {
    PropertyCheckReport report;
    report.property = PropertyKind::FixedPointConsistent;
    report.tolerance = tol;
    if (!p.known_solution) {
        PropertyViolation v;
        v.note = "problem declares no known solution";
        report.violations.push_back(std::move(v));
        report.passed = false;
        return report;
    }
    const auto& [xs, ys] = *p.known_solution;
    report.samples = 5;

    const auto record = [&](double lhs, const std::string& note,
                            std::vector<Point> witness) {
        if (lhs > tol) {
            PropertyViolation v;
            v.witness = std::move(witness);
            v.lhs = lhs;
            v.rhs = tol;
            v.margin = lhs - tol;
            v.note = note;
            report.violations.push_back(std::move(v));
        }
    };
    record(distance(xs, p.C.project(xs)), "x* lies outside C", {xs});
    record(distance(ys, p.Q.project(ys)), "y* lies outside Q", {ys});
    record(fixed_point_residual(p.U, xs), "x* is not fixed under U", {xs});
    record(fixed_point_residual(p.T, ys), "y* is not fixed under T", {ys});
    record(coupling_residual(p.A, p.B, xs, ys), "A x* != B y*", {xs, ys});
    report.passed = report.violations.empty();
    return report;
}

}  // namespace splitsolve

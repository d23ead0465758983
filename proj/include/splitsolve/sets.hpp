#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "splitsolve/errors.hpp"
#include "splitsolve/operator.hpp"
#include "splitsolve/point.hpp"

namespace splitsolve {

namespace detail {

/// Solve the symmetric positive-definite system G t = b by Gaussian
/// elimination with partial pivoting. G is n x n row-major.
inline std::vector<double> solve_dense(std::vector<double> g, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(g[r * n + col]) > std::abs(g[pivot * n + col])) pivot = r;
        }
        if (g[pivot * n + col] == 0.0) {
            throw DomainError("affine subspace basis has linearly dependent columns");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(g[col * n + j], g[pivot * n + j]);
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = g[r * n + col] / g[col * n + col];
            for (std::size_t j = col; j < n; ++j) g[r * n + j] -= f * g[col * n + j];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> t(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double sum = b[i];
        for (std::size_t j = i + 1; j < n; ++j) sum -= g[i * n + j] * t[j];
        t[i] = sum / g[i * n + i];
    }
    return t;
}

}  // namespace detail

/// A closed convex set with an exact metric projection. Each variant projects
/// in closed form; no inner iterative solver is involved.
class ConvexSet {
public:
    enum class Kind { WholeSpace, NonnegativeOrthant, Box, Ball, HalfSpace, AffineSubspace };

    static ConvexSet whole_space(std::size_t dim) {
        ConvexSet s(Kind::WholeSpace, dim);
        return s;
    }

    static ConvexSet nonnegative_orthant(std::size_t dim) {
        ConvexSet s(Kind::NonnegativeOrthant, dim);
        return s;
    }

    /// Per-coordinate bounds; -inf / +inf mark unbounded sides. An empty box
    /// (lower > upper in a coordinate) is rejected here.
    static ConvexSet box(std::vector<double> lower, std::vector<double> upper) {
        if (lower.size() != upper.size()) {
            throw DimensionError("Box: lower and upper bound dimensions differ");
        }
        for (std::size_t i = 0; i < lower.size(); ++i) {
            if (std::isnan(lower[i]) || std::isnan(upper[i])) {
                throw NumericError("Box: NaN bound at coordinate " + std::to_string(i));
            }
            if (lower[i] > upper[i]) {
                throw DomainError("Box: empty (lower > upper) at coordinate " +
                                  std::to_string(i));
            }
        }
        ConvexSet s(Kind::Box, lower.size());
        s.lower_ = std::move(lower);
        s.upper_ = std::move(upper);
        return s;
    }

    static ConvexSet ball(Point center, double radius) {
        if (!(radius > 0.0)) throw DomainError("Ball: radius must be positive");
        ConvexSet s(Kind::Ball, center.dim());
        s.center_ = std::move(center);
        s.radius_ = radius;
        return s;
    }

    /// { x : <normal, x> <= offset }.
    static ConvexSet half_space(Point normal, double offset) {
        const double nn = inner(normal, normal);
        if (nn == 0.0) throw DomainError("HalfSpace: normal must be nonzero");
        ConvexSet s(Kind::HalfSpace, normal.dim());
        s.center_ = std::move(normal);
        s.radius_ = offset;
        s.normal_sq_ = nn;
        return s;
    }

    /// { shift + basis * t }. The orthogonal projector onto the span of the
    /// basis columns is precomputed from the Gram matrix, so projection is a
    /// single matrix-vector product.
    static ConvexSet affine_subspace(const DenseOperator& basis, Point shift) {
        require_same_dim(basis.codomain_dim(), shift.dim(), "AffineSubspace");
        const std::size_t n = basis.codomain_dim();
        const std::size_t k = basis.domain_dim();
        // Gram = basis^T basis
        std::vector<double> gram(k * k, 0.0);
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                double sum = 0.0;
                for (std::size_t i = 0; i < n; ++i) sum += basis.at(i, a) * basis.at(i, b);
                gram[a * k + b] = sum;
            }
        }
        // projector = basis * Gram^{-1} * basis^T, built column by column
        std::vector<double> proj(n * n, 0.0);
        for (std::size_t col = 0; col < n; ++col) {
            std::vector<double> bt(k, 0.0);
            for (std::size_t a = 0; a < k; ++a) bt[a] = basis.at(col, a);
            const std::vector<double> t = detail::solve_dense(gram, std::move(bt));
            for (std::size_t i = 0; i < n; ++i) {
                double sum = 0.0;
                for (std::size_t a = 0; a < k; ++a) sum += basis.at(i, a) * t[a];
                proj[i * n + col] = sum;
            }
        }
        ConvexSet s(Kind::AffineSubspace, n);
        s.center_ = std::move(shift);
        s.projector_ = std::make_shared<DenseOperator>(n, n, std::move(proj));
        return s;
    }

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }

    Point project(const Point& x) const {
        require_same_dim(x.dim(), dim_, "ConvexSet::project");
        switch (kind_) {
            case Kind::WholeSpace:
                return x;
            case Kind::NonnegativeOrthant: {
                std::vector<double> out(x.coords());
                for (double& c : out) c = std::max(0.0, c);
                return Point(std::move(out));
            }
            case Kind::Box: {
                std::vector<double> out(x.coords());
                for (std::size_t i = 0; i < out.size(); ++i) {
                    out[i] = std::clamp(out[i], lower_[i], upper_[i]);
                }
                return Point(std::move(out));
            }
            case Kind::Ball: {
                const Point d = x - center_;
                const double nd = norm(d);
                if (nd <= radius_) return x;
                return axpy(center_, radius_ / nd, d);
            }
            case Kind::HalfSpace: {
                const double slack = inner(center_, x) - radius_;
                if (slack <= 0.0) return x;
                return axpy(x, -slack / normal_sq_, center_);
            }
            case Kind::AffineSubspace:
                return center_ + projector_->apply(x - center_);
        }
        throw Error("ConvexSet::project: unreachable");
    }

    bool contains(const Point& x, double tol = 1e-12) const {
        return distance(x, project(x)) <= tol;
    }

    const char* kind_name() const {
        switch (kind_) {
            case Kind::WholeSpace: return "whole-space";
            case Kind::NonnegativeOrthant: return "nonnegative-orthant";
            case Kind::Box: return "box";
            case Kind::Ball: return "ball";
            case Kind::HalfSpace: return "half-space";
            case Kind::AffineSubspace: return "affine-subspace";
        }
        return "?";
    }

    // Variant payload accessors, used for serialization.
    const std::vector<double>& box_lower() const { return lower_; }
    const std::vector<double>& box_upper() const { return upper_; }
    const Point& ball_center() const { return center_; }
    double ball_radius() const { return radius_; }
    const Point& half_space_normal() const { return center_; }
    double half_space_offset() const { return radius_; }

private:
    ConvexSet(Kind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

    Kind kind_;
    std::size_t dim_;
    std::vector<double> lower_;
    std::vector<double> upper_;
    Point center_;        // Ball center / HalfSpace normal / AffineSubspace shift
    double radius_ = 0.0; // Ball radius / HalfSpace offset
    double normal_sq_ = 0.0;
    std::shared_ptr<const DenseOperator> projector_;
};

inline Point project(const ConvexSet& set, const Point& x) { return set.project(x); }

}  // namespace splitsolve

#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "splitsolve/errors.hpp"

namespace splitsolve {

/// A vector in R^n with the Euclidean inner product. Immutable after
/// construction; every constructor rejects NaN/Inf coordinates, so any
/// arithmetic that would produce a non-finite value fails loudly at the
/// point where it happens.
class Point {
public:
    Point() = default;

    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {
        validate();
    }

    Point(std::initializer_list<double> coords) : coords_(coords) { validate(); }

    static Point zeros(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

    static Point constant(std::size_t dim, double value) {
        return Point(std::vector<double>(dim, value));
    }

    std::size_t dim() const { return coords_.size(); }

    double operator[](std::size_t i) const { return coords_[i]; }

    const std::vector<double>& coords() const { return coords_; }

    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

private:
    void validate() const {
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (!std::isfinite(coords_[i])) {
                throw NumericError("non-finite coordinate at index " + std::to_string(i));
            }
        }
    }

    std::vector<double> coords_;
};

inline double inner(const Point& a, const Point& b) {
    require_same_dim(a.dim(), b.dim(), "inner");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
    if (!std::isfinite(sum)) throw NumericError("inner product overflowed");
    return sum;
}

inline double norm(const Point& a) { return std::sqrt(inner(a, a)); }

inline Point operator+(const Point& a, const Point& b) {
    require_same_dim(a.dim(), b.dim(), "operator+");
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
    return Point(std::move(out));
}

inline Point operator-(const Point& a, const Point& b) {
    require_same_dim(a.dim(), b.dim(), "operator-");
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
    return Point(std::move(out));
}

inline Point operator*(double s, const Point& a) {
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = s * a[i];
    return Point(std::move(out));
}

/// a + s*b in one pass.
inline Point axpy(const Point& a, double s, const Point& b) {
    require_same_dim(a.dim(), b.dim(), "axpy");
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + s * b[i];
    return Point(std::move(out));
}

/// (1-t)*a + t*b, the relaxation step used by every scheme.
inline Point relax(const Point& a, const Point& b, double t) {
    require_same_dim(a.dim(), b.dim(), "relax");
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = (1.0 - t) * a[i] + t * b[i];
    return Point(std::move(out));
}

inline double distance(const Point& a, const Point& b) { return norm(a - b); }

}  // namespace splitsolve

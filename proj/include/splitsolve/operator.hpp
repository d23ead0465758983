#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "splitsolve/errors.hpp"
#include "splitsolve/point.hpp"

namespace splitsolve {

/// A bounded linear operator R^m -> R^k stored as a dense row-major matrix.
/// The adjoint is the transpose.
class DenseOperator {
public:
    DenseOperator(std::size_t rows, std::size_t cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw DimensionError("DenseOperator: expected " + std::to_string(rows_ * cols_) +
                                 " entries, got " + std::to_string(entries_.size()));
        }
        for (double e : entries_) {
            if (!std::isfinite(e)) throw NumericError("DenseOperator: non-finite entry");
        }
    }

    static DenseOperator identity(std::size_t n) {
        std::vector<double> e(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
        return DenseOperator(n, n, std::move(e));
    }

    static DenseOperator zero(std::size_t rows, std::size_t cols) {
        return DenseOperator(rows, cols, std::vector<double>(rows * cols, 0.0));
    }

    static DenseOperator scalar(double value) { return DenseOperator(1, 1, {value}); }

    static DenseOperator from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty()) throw DimensionError("DenseOperator: no rows");
        const std::size_t cols = rows.front().size();
        std::vector<double> e;
        e.reserve(rows.size() * cols);
        for (const auto& row : rows) {
            if (row.size() != cols) throw DimensionError("DenseOperator: ragged rows");
            e.insert(e.end(), row.begin(), row.end());
        }
        return DenseOperator(rows.size(), cols, std::move(e));
    }

    std::size_t domain_dim() const { return cols_; }
    std::size_t codomain_dim() const { return rows_; }

    double at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<double>& entries() const { return entries_; }

    Point apply(const Point& x) const {
        require_same_dim(x.dim(), cols_, "DenseOperator::apply");
        std::vector<double> out(rows_, 0.0);
        for (std::size_t i = 0; i < rows_; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < cols_; ++j) sum += entries_[i * cols_ + j] * x[j];
            out[i] = sum;
        }
        return Point(std::move(out));
    }

    /// A^T v without materializing the transpose.
    Point apply_adjoint(const Point& v) const {
        require_same_dim(v.dim(), rows_, "DenseOperator::apply_adjoint");
        std::vector<double> out(cols_, 0.0);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out[j] += entries_[i * cols_ + j] * v[i];
        }
        return Point(std::move(out));
    }

    DenseOperator adjoint() const {
        std::vector<double> e(rows_ * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = entries_[i * cols_ + j];
        }
        return DenseOperator(cols_, rows_, std::move(e));
    }

    bool is_zero() const {
        for (double e : entries_) {
            if (e != 0.0) return false;
        }
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (at(i, j) != (i == j ? 1.0 : 0.0)) return false;
            }
        }
        return true;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

inline Point apply(const DenseOperator& op, const Point& x) { return op.apply(x); }
inline DenseOperator adjoint(const DenseOperator& op) { return op.adjoint(); }

}  // namespace splitsolve

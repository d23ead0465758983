#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "splitsolve/errors.hpp"

namespace splitsolve {

/// A rule producing one parameter value per iteration index n >= 1, together
/// with the open interval the values must stay inside.
///
///   Constant   the same value every iteration
///   Sequence   explicit values; the last one repeats forever
///   Harmonic   max(floor, base/n)
class Schedule {
public:
    enum class Kind { Constant, Sequence, Harmonic };

    static Schedule constant(double value) {
        Schedule s(Kind::Constant);
        s.values_ = {value};
        return s;
    }

    static Schedule sequence(std::vector<double> values) {
        if (values.empty()) throw ConfigError("Schedule::sequence: empty value list");
        Schedule s(Kind::Sequence);
        s.values_ = std::move(values);
        return s;
    }

    static Schedule harmonic(double base, double floor) {
        if (!(base > 0.0) || !(floor > 0.0)) {
            throw ConfigError("Schedule::harmonic: base and floor must be positive");
        }
        Schedule s(Kind::Harmonic);
        s.values_ = {base, floor};
        return s;
    }

    Schedule with_bounds(double lower, double upper) const {
        Schedule s(*this);
        s.lower_ = lower;
        s.upper_ = upper;
        return s;
    }

    Kind kind() const { return kind_; }
    double lower_bound() const { return lower_; }
    double upper_bound() const { return upper_; }
    const std::vector<double>& values() const { return values_; }

    /// Raw value for iteration n >= 1, no bound enforcement.
    double at(std::size_t n) const {
        switch (kind_) {
            case Kind::Constant:
                return values_[0];
            case Kind::Sequence:
                return values_[std::min(n - 1, values_.size() - 1)];
            case Kind::Harmonic:
                return std::max(values_[1], values_[0] / static_cast<double>(n));
        }
        throw Error("Schedule::at: unreachable");
    }

    bool in_bounds(double value) const { return value > lower_ && value < upper_; }

    /// Value for iteration n, checked against the open interval.
    double checked_at(std::size_t n, const char* name) const {
        const double v = at(n);
        if (!in_bounds(v)) {
            throw ConfigError(std::string(name) + " = " + std::to_string(v) +
                              " at iteration " + std::to_string(n) +
                              " violates the open interval (" + std::to_string(lower_) +
                              ", " + std::to_string(upper_) + ")");
        }
        return v;
    }

private:
    explicit Schedule(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::vector<double> values_;
    double lower_ = -std::numeric_limits<double>::infinity();
    double upper_ = std::numeric_limits<double>::infinity();
};

}  // namespace splitsolve

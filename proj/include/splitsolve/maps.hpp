#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitsolve/errors.hpp"
#include "splitsolve/point.hpp"
#include "splitsolve/sets.hpp"

namespace splitsolve {

/// A nonlinear self-mapping with an optional declared fixed point. The
/// catalog covers the maps the solvers and their tests need:
///
///   Identity            x -> x
///   Rational            x -> (x^2+5)/(1+x) per coordinate, domain x >= 0
///   AffineShrink        x -> (x+5)/5 per coordinate
///   ContractionToward   x -> q + rho*(x - q), rho in [0,1)
///   Projection          x -> P_S(x) for a convex set S
///   Relaxed             x -> (1-theta)x + theta*base(x), theta in (0,1]
///
/// Every variant is quasi-nonexpansive: ||Tx - q|| <= ||x - q|| for each
/// fixed point q. Rational has the unique fixed point 5 (per coordinate),
/// AffineShrink has 5/4.
class QuasiNonexpansiveMap {
public:
    enum class Kind { Identity, Rational, AffineShrink, ContractionToward, Projection, Relaxed };

    static QuasiNonexpansiveMap identity() { return QuasiNonexpansiveMap(Kind::Identity); }

    static QuasiNonexpansiveMap rational() { return QuasiNonexpansiveMap(Kind::Rational); }

    static QuasiNonexpansiveMap affine_shrink() {
        return QuasiNonexpansiveMap(Kind::AffineShrink);
    }

    static QuasiNonexpansiveMap contraction_toward(Point anchor, double rho) {
        if (!(rho >= 0.0 && rho < 1.0)) {
            throw ConfigError("ContractionToward: ratio must lie in [0,1)");
        }
        QuasiNonexpansiveMap m(Kind::ContractionToward);
        m.anchor_ = std::move(anchor);
        m.rho_ = rho;
        m.fixed_point_ = m.anchor_;
        return m;
    }

    static QuasiNonexpansiveMap projection(ConvexSet set) {
        QuasiNonexpansiveMap m(Kind::Projection);
        m.set_ = std::make_shared<ConvexSet>(std::move(set));
        return m;
    }

    static QuasiNonexpansiveMap relaxed(QuasiNonexpansiveMap base, double theta) {
        if (!(theta > 0.0 && theta <= 1.0)) {
            throw ConfigError("Relaxed: relaxation must lie in (0,1]");
        }
        QuasiNonexpansiveMap m(Kind::Relaxed);
        m.base_ = std::make_shared<QuasiNonexpansiveMap>(std::move(base));
        m.theta_ = theta;
        m.fixed_point_ = m.base_->fixed_point_;
        return m;
    }

    /// Attach a declared fixed point, verified to 1e-12 at attach time.
    QuasiNonexpansiveMap with_fixed_point(Point q) const {
        QuasiNonexpansiveMap m(*this);
        const Point image = m.apply(q);
        if (distance(image, q) > 1e-12) {
            throw ConfigError("declared fixed point is not fixed under the map");
        }
        m.fixed_point_ = std::move(q);
        return m;
    }

    Kind kind() const { return kind_; }

    const std::optional<Point>& declared_fixed_point() const { return fixed_point_; }

    Point apply(const Point& x) const {
        switch (kind_) {
            case Kind::Identity:
                return x;
            case Kind::Rational: {
                std::vector<double> out(x.dim());
                for (std::size_t i = 0; i < x.dim(); ++i) {
                    const double c = x[i];
                    if (c < 0.0) {
                        throw DomainError("rational map: coordinate " + std::to_string(i) +
                                          " = " + std::to_string(c) +
                                          " outside domain [0, inf)");
                    }
                    out[i] = (c * c + 5.0) / (1.0 + c);
                }
                return Point(std::move(out));
            }
            case Kind::AffineShrink: {
                std::vector<double> out(x.dim());
                for (std::size_t i = 0; i < x.dim(); ++i) out[i] = (x[i] + 5.0) / 5.0;
                return Point(std::move(out));
            }
            case Kind::ContractionToward:
                return axpy(anchor_, rho_, x - anchor_);
            case Kind::Projection:
                return set_->project(x);
            case Kind::Relaxed:
                return relax(x, base_->apply(x), theta_);
        }
        throw Error("QuasiNonexpansiveMap::apply: unreachable");
    }

    Point operator()(const Point& x) const { return apply(x); }

    const char* kind_name() const {
        switch (kind_) {
            case Kind::Identity: return "identity";
            case Kind::Rational: return "rational";
            case Kind::AffineShrink: return "affine-shrink";
            case Kind::ContractionToward: return "contraction";
            case Kind::Projection: return "projection";
            case Kind::Relaxed: return "relaxed";
        }
        return "?";
    }

    // Payload accessors for serialization.
    const Point& contraction_anchor() const { return anchor_; }
    double contraction_ratio() const { return rho_; }
    const ConvexSet& projection_set() const { return *set_; }
    const QuasiNonexpansiveMap& relaxed_base() const { return *base_; }
    double relaxed_theta() const { return theta_; }

private:
    explicit QuasiNonexpansiveMap(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::optional<Point> fixed_point_;
    Point anchor_;
    double rho_ = 0.0;
    std::shared_ptr<const ConvexSet> set_;
    std::shared_ptr<const QuasiNonexpansiveMap> base_;
    double theta_ = 1.0;
};

inline Point map_apply(const QuasiNonexpansiveMap& m, const Point& x) { return m.apply(x); }

}  // namespace splitsolve

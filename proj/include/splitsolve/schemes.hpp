#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "splitsolve/errors.hpp"
#include "splitsolve/problem.hpp"

namespace splitsolve {

/// The iteration schemes the solve driver can run. All of them share the
/// SffpepProblem data model; schemes that ignore C and Q simply never
/// project, and the two single-sequence schemes (byrne, chen) require B = I
/// so that Q lives in the codomain of A.
enum class SchemeId { Sffpep, Corollary, Moudafi, Landweber, Byrne, Yuan, Chidume, Chen };

inline std::string_view scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::Sffpep: return "sffpep";
        case SchemeId::Corollary: return "corollary";
        case SchemeId::Moudafi: return "moudafi";
        case SchemeId::Landweber: return "landweber";
        case SchemeId::Byrne: return "byrne";
        case SchemeId::Yuan: return "yuan";
        case SchemeId::Chidume: return "chidume";
        case SchemeId::Chen: return "chen";
    }
    return "?";
}

inline std::optional<SchemeId> parse_scheme(std::string_view name) {
    for (SchemeId id : {SchemeId::Sffpep, SchemeId::Corollary, SchemeId::Moudafi,
                        SchemeId::Landweber, SchemeId::Byrne, SchemeId::Yuan,
                        SchemeId::Chidume, SchemeId::Chen}) {
        if (scheme_name(id) == name) return id;
    }
    return std::nullopt;
}

/// One step of the main double-relaxation scheme. Both halves read the same
/// (x_n, y_n): the update is simultaneous, not Gauss-Seidel.
///
///   z = P_C(x - lambda A^T(Ax - By))     u = P_Q(y + lambda B^T(Ax - By))
///   w = (1-beta) z + beta U(z)           r = (1-beta) u + beta T(u)
///   x+ = (1-alpha) z + alpha U(w)        y+ = (1-alpha) u + alpha T(r)
inline IterateState sffpep_iterate(const SffpepProblem& p, const IterateState& s,
                                   double lambda, double alpha, double beta) {
    const Point d = p.A.apply(s.x) - p.B.apply(s.y);

    IterateState next;
    next.n = s.n + 1;
    next.z = p.C.project(axpy(s.x, -lambda, p.A.apply_adjoint(d)));
    next.w = relax(next.z, p.U.apply(next.z), beta);
    next.x = relax(next.z, p.U.apply(next.w), alpha);
    next.u = p.Q.project(axpy(s.y, lambda, p.B.apply_adjoint(d)));
    next.r = relax(next.u, p.T.apply(next.u), beta);
    next.y = relax(next.u, p.T.apply(next.r), alpha);
    return next;
}

/// Single-relaxation corollary scheme: no projections, beta = 0.
///
///   z = x - lambda A^T(Ax - By)          u = y + lambda B^T(Ax - By)
///   x+ = (1-alpha) z + alpha U(z)        y+ = (1-alpha) u + alpha T(u)
inline IterateState corollary_iterate(const SffpepProblem& p, const IterateState& s,
                                      double lambda, double alpha) {
    const Point d = p.A.apply(s.x) - p.B.apply(s.y);

    IterateState next;
    next.n = s.n + 1;
    next.z = axpy(s.x, -lambda, p.A.apply_adjoint(d));
    next.w = next.z;
    next.x = relax(next.z, p.U.apply(next.z), alpha);
    next.u = axpy(s.y, lambda, p.B.apply_adjoint(d));
    next.r = next.u;
    next.y = relax(next.u, p.T.apply(next.u), alpha);
    return next;
}

/// Simultaneous fixed-point scheme: x+ = U(x - lambda A^T(Ax-By)),
/// y+ = T(y + lambda B^T(Ax-By)). C and Q are ignored.
inline std::pair<Point, Point> moudafi_alshemas_iterate(const SffpepProblem& p,
                                                        const IterateState& s, double lambda) {
    const Point d = p.A.apply(s.x) - p.B.apply(s.y);
    return {p.U.apply(axpy(s.x, -lambda, p.A.apply_adjoint(d))),
            p.T.apply(axpy(s.y, lambda, p.B.apply_adjoint(d)))};
}

/// Projected Landweber scheme: the fixed-point maps are replaced by the
/// metric projections onto C and Q.
inline std::pair<Point, Point> landweber_iterate(const SffpepProblem& p, const IterateState& s,
                                                 double lambda) {
    const Point d = p.A.apply(s.x) - p.B.apply(s.y);
    return {p.C.project(axpy(s.x, -lambda, p.A.apply_adjoint(d))),
            p.Q.project(axpy(s.y, lambda, p.B.apply_adjoint(d)))};
}

/// CQ step: x+ = P_C(x - lambda A^T (I - P_Q) A x). Q lives in the codomain
/// of A.
inline Point byrne_cq_iterate(const ConvexSet& C, const ConvexSet& Q, const DenseOperator& A,
                              const Point& x, double lambda) {
    const Point ax = A.apply(x);
    const Point residual = ax - Q.project(ax);
    return C.project(axpy(x, -lambda, A.apply_adjoint(residual)));
}

/// Relaxed simultaneous scheme:
///   x+ = (1-alpha) x + alpha U(x - lambda A^T(Ax-By)), y-side analogous.
inline std::pair<Point, Point> yuan_iterate(const SffpepProblem& p, const IterateState& s,
                                            double lambda, double alpha) {
    const Point d = p.A.apply(s.x) - p.B.apply(s.y);
    return {relax(s.x, p.U.apply(axpy(s.x, -lambda, p.A.apply_adjoint(d))), alpha),
            relax(s.y, p.T.apply(axpy(s.y, lambda, p.B.apply_adjoint(d))), alpha)};
}

/// Averaged simultaneous scheme:
///   u = x - lambda A^T(Ax-By),  x+ = (1-alpha) u + alpha U(u), y-side analogous.
inline std::pair<Point, Point> chidume_iterate(const SffpepProblem& p, const IterateState& s,
                                               double lambda, double alpha) {
    const Point d = p.A.apply(s.x) - p.B.apply(s.y);
    const Point u = axpy(s.x, -lambda, p.A.apply_adjoint(d));
    const Point r = axpy(s.y, lambda, p.B.apply_adjoint(d));
    return {relax(u, p.U.apply(u), alpha), relax(r, p.T.apply(r), alpha)};
}

/// Extra-gradient step with an inner map U acting in the codomain of A and a
/// relaxation map T acting in the domain:
///   y = P_C(x - lambda A^T (I - U P_Q) A x)
///   z = P_C(x - lambda A^T (I - U P_Q) A y)
///   w = (1-beta) z + beta T(z)
///   x+ = (1-alpha) z + alpha T(w)
inline Point chen_iterate(const ConvexSet& C, const ConvexSet& Q, const DenseOperator& A,
                          const QuasiNonexpansiveMap& U, const QuasiNonexpansiveMap& T,
                          const Point& x, double lambda, double alpha, double beta) {
    const auto gradient_residual = [&](const Point& v) {
        const Point av = A.apply(v);
        return av - U.apply(Q.project(av));
    };
    const Point y = C.project(axpy(x, -lambda, A.apply_adjoint(gradient_residual(x))));
    const Point z = C.project(axpy(x, -lambda, A.apply_adjoint(gradient_residual(y))));
    const Point w = relax(z, T.apply(z), beta);
    return relax(z, T.apply(w), alpha);
}

namespace detail {

/// Uniform full-state step used by the solve driver. For schemes without the
/// double relaxation, z and u are the points where the fixed-point residuals
/// are measured (the pre-map correction points where those exist, the new
/// iterates otherwise).
inline IterateState scheme_step(const SffpepProblem& p, const IterateState& s, SchemeId scheme,
                                double lambda, double alpha, double beta) {
    switch (scheme) {
        case SchemeId::Sffpep:
            return sffpep_iterate(p, s, lambda, alpha, beta);
        case SchemeId::Corollary:
            return corollary_iterate(p, s, lambda, alpha);
        case SchemeId::Moudafi: {
            const Point d = p.A.apply(s.x) - p.B.apply(s.y);
            IterateState next;
            next.n = s.n + 1;
            next.z = axpy(s.x, -lambda, p.A.apply_adjoint(d));
            next.w = next.z;
            next.x = p.U.apply(next.z);
            next.u = axpy(s.y, lambda, p.B.apply_adjoint(d));
            next.r = next.u;
            next.y = p.T.apply(next.u);
            return next;
        }
        case SchemeId::Landweber: {
            auto [xn, yn] = landweber_iterate(p, s, lambda);
            IterateState next;
            next.n = s.n + 1;
            next.z = next.w = next.x = std::move(xn);
            next.u = next.r = next.y = std::move(yn);
            return next;
        }
        case SchemeId::Byrne: {
            if (!p.B.is_identity()) {
                throw ConfigError("byrne scheme requires B = I (Q in the codomain of A)");
            }
            IterateState next;
            next.n = s.n + 1;
            next.z = next.w = next.x = byrne_cq_iterate(p.C, p.Q, p.A, s.x, lambda);
            next.u = next.r = next.y = p.Q.project(p.A.apply(s.x));
            return next;
        }
        case SchemeId::Yuan: {
            const Point d = p.A.apply(s.x) - p.B.apply(s.y);
            IterateState next;
            next.n = s.n + 1;
            next.z = axpy(s.x, -lambda, p.A.apply_adjoint(d));
            next.w = next.z;
            next.x = relax(s.x, p.U.apply(next.z), alpha);
            next.u = axpy(s.y, lambda, p.B.apply_adjoint(d));
            next.r = next.u;
            next.y = relax(s.y, p.T.apply(next.u), alpha);
            return next;
        }
        case SchemeId::Chidume: {
            const Point d = p.A.apply(s.x) - p.B.apply(s.y);
            IterateState next;
            next.n = s.n + 1;
            next.z = axpy(s.x, -lambda, p.A.apply_adjoint(d));
            next.w = next.z;
            next.x = relax(next.z, p.U.apply(next.z), alpha);
            next.u = axpy(s.y, lambda, p.B.apply_adjoint(d));
            next.r = next.u;
            next.y = relax(next.u, p.T.apply(next.u), alpha);
            return next;
        }
        case SchemeId::Chen: {
            if (!p.B.is_identity()) {
                throw ConfigError("chen scheme requires B = I (Q in the codomain of A)");
            }
            // T acts in the codomain of A, U in the domain, so the problem's
            // maps swap roles relative to the double-relaxation schemes.
            IterateState next;
            next.n = s.n + 1;
            next.z = next.w = next.x =
                chen_iterate(p.C, p.Q, p.A, p.T, p.U, s.x, lambda, alpha, beta);
            next.u = next.r = next.y = p.Q.project(p.A.apply(s.x));
            return next;
        }
    }
    throw Error("scheme_step: unreachable");
}

}  // namespace detail

}  // namespace splitsolve

#pragma once

#include <utility>
#include <vector>

#include "splitsolve/diagnostics.hpp"
#include "splitsolve/problem.hpp"
#include "splitsolve/schemes.hpp"

namespace splitsolve {

/// Run a scheme from (x0, y0) until the composite residual
/// max(||Ax-By||, ||Uz-z||, ||Tu-u||) drops to residual_tol or max_iters is
/// reached. One TraceRecord is appended per iteration, measured at the
/// pre-step iterate (x_n, y_n) with the intermediates the step produced.
/// A NumericError inside a step terminates the run with the partial trace.
inline SolveResult solve(const SffpepProblem& p, const SolverParams& params, SchemeId scheme,
                         Point x0, Point y0) {
    require_same_dim(x0.dim(), p.dim_x(), "solve: x0");
    require_same_dim(y0.dim(), p.dim_y(), "solve: y0");

    SolveResult result;
    result.trace.reserve(std::min<std::size_t>(params.max_iters, 4096));
    IterateState state = IterateState::initial(std::move(x0), std::move(y0));

    for (std::size_t n = 1; n <= params.max_iters; ++n) {
        state.n = n;
        // Parameter bound violations throw ConfigError out of solve: they are
        // caller errors, not numeric failures of the iteration.
        const double lambda = params.validate_lambda ? params.lambda.checked_at(n, "lambda")
                                                     : params.lambda.at(n);
        const double alpha = params.alpha.checked_at(n, "alpha");
        const double beta = params.beta.checked_at(n, "beta");

        IterateState next;
        TraceRecord record;
        try {
            next = detail::scheme_step(p, state, scheme, lambda, alpha, beta);
            record.n = n;
            record.coupling_residual = coupling_residual(p.A, p.B, state.x, state.y);
            record.fix_residual_U = fixed_point_residual(p.U, next.z);
            record.fix_residual_T = fixed_point_residual(p.T, next.u);
        } catch (const NumericError& e) {
            result.final = std::move(state);
            result.termination = Termination::NumericError;
            result.iterations = n - 1;
            result.error_message = e.what();
            return result;
        } catch (const DomainError& e) {
            result.final = std::move(state);
            result.termination = Termination::NumericError;
            result.iterations = n - 1;
            result.error_message = e.what();
            return result;
        }
        if (p.known_solution) {
            record.lyapunov = lyapunov_value(state.x, state.y, p.known_solution->first,
                                             p.known_solution->second);
        }
        record.x_snapshot = state.x;
        record.y_snapshot = state.y;
        result.trace.push_back(record);

        if (record.composite() <= params.residual_tol) {
            // The tolerance held at (x_n, y_n); report that state together
            // with the intermediates of the step just taken.
            result.final = state;
            result.final.z = next.z;
            result.final.w = next.w;
            result.final.u = next.u;
            result.final.r = next.r;
            result.termination = Termination::ResidualTolMet;
            result.iterations = n;
            return result;
        }
        state = std::move(next);
    }

    result.final = std::move(state);
    result.termination = Termination::MaxIters;
    result.iterations = params.max_iters;
    return result;
}

/// Convenience overload: start from the zero points of the right dimensions.
inline SolveResult solve(const SffpepProblem& p, const SolverParams& params, SchemeId scheme) {
    return solve(p, params, scheme, Point::zeros(p.dim_x()), Point::zeros(p.dim_y()));
}

}  // namespace splitsolve

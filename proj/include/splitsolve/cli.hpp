#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "splitsolve/config.hpp"
#include "splitsolve/diagnostics.hpp"
#include "splitsolve/paper_tables.hpp"
#include "splitsolve/problem_library.hpp"
#include "splitsolve/solve.hpp"
#include "splitsolve/trace_csv.hpp"

namespace splitsolve::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
    kOk = 0,
    kConfigError = 1,
    kMaxIters = 2,
    kNumericError = 3,
    kTableMismatch = 4,
    kPropertyViolation = 5,
    kSpectralFailure = 6,
};

inline int cmd_solve(const RunConfig& cfg, std::uint64_t seed, std::ostream& out,
                     std::ostream& err) {
    try {
        const SffpepProblem problem = build_problem(cfg);
        const SolverParams params = build_params(cfg, problem, seed);
        auto [x0, y0] = build_start(cfg, problem);
        const SolveResult result = solve(problem, params, cfg.scheme, std::move(x0), std::move(y0));

        if (cfg.trace_path) {
            write_file_atomic(*cfg.trace_path,
                              trace_to_csv(result.trace, problem.dim_x(), problem.dim_y()));
        }

        std::ostringstream summary;
        summary << "scheme:      " << scheme_name(cfg.scheme) << "\n"
                << "termination: " << termination_name(result.termination) << "\n"
                << "iterations:  " << result.iterations << "\n";
        if (!result.trace.empty()) {
            const TraceRecord& last = result.trace.back();
            summary << "coupling residual:  " << format_double(last.coupling_residual) << "\n"
                    << "fix residual U:     " << format_double(last.fix_residual_U) << "\n"
                    << "fix residual T:     " << format_double(last.fix_residual_T) << "\n";
            if (last.lyapunov) {
                summary << "lyapunov:           " << format_double(*last.lyapunov) << "\n";
            }
        }
        summary << "final x:";
        for (double c : result.final.x) summary << ' ' << format_double(c);
        summary << "\nfinal y:";
        for (double c : result.final.y) summary << ' ' << format_double(c);
        summary << "\n";
        if (result.termination == Termination::NumericError) {
            summary << "error at iteration " << (result.iterations + 1) << ": "
                    << result.error_message << "\n";
        }
        out << summary.str();
        if (cfg.report_path) write_file_atomic(*cfg.report_path, summary.str());

        switch (result.termination) {
            case Termination::ResidualTolMet: return kOk;
            case Termination::MaxIters: return kMaxIters;
            case Termination::NumericError: return kNumericError;
        }
        return kConfigError;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

namespace detail {

struct TableDiff {
    std::size_t rows_checked = 0;
    std::size_t rows_matched = 0;
    std::optional<std::size_t> first_mismatch_n;
};

inline TableDiff diff_table(const std::vector<TableRow>& fixture, double x0, double y0,
                            const char* label, std::ostream& out) {
    std::size_t max_n = 0;
    for (const TableRow& row : fixture) max_n = std::max(max_n, row.n);
    const std::vector<RecurrenceRow> rows = paper_recurrence_run(x0, y0, max_n);

    TableDiff diff;
    for (const TableRow& want : fixture) {
        const RecurrenceRow& got = rows.at(want.n);
        const double dx = std::abs(got.x - want.x);
        const double dy = std::abs(got.y - want.y);
        const bool ok = dx <= kTableAbsTol && dy <= kTableAbsTol;
        ++diff.rows_checked;
        if (ok) {
            ++diff.rows_matched;
        } else if (!diff.first_mismatch_n) {
            diff.first_mismatch_n = want.n;
        }
        out << label << " n=" << want.n << "  x=" << format_double(got.x)
            << " (expected " << format_double(want.x) << ")  y=" << format_double(got.y)
            << " (expected " << format_double(want.y) << ")  "
            << (ok ? "PASS" : "FAIL") << "\n";
    }
    return diff;
}

}  // namespace detail

/// Re-run the bundled example recurrence and diff it against the golden
/// tables (embedded by default, or an external n,x,y fixture CSV pair for
/// regression experiments). Prints a per-row pass/fail matrix.
inline int cmd_reproduce_tables(std::ostream& out, std::ostream& err,
                                std::optional<std::string> fixture1_path = std::nullopt,
                                std::optional<std::string> fixture2_path = std::nullopt) {
    try {
        const auto load = [](const std::optional<std::string>& path, std::string_view fallback) {
            if (!path) return parse_table_csv(fallback);
            std::ifstream in(*path);
            if (!in) throw ConfigError("cannot read fixture '" + *path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_table_csv(buf.str());
        };
        const auto table1 = load(fixture1_path, kTable1Csv);
        const auto table2 = load(fixture2_path, kTable2Csv);

        const auto d1 = detail::diff_table(table1, kTable1StartX, kTable1StartY, "table1", out);
        const auto d2 = detail::diff_table(table2, kTable2StartX, kTable2StartY, "table2", out);
        const std::size_t checked = d1.rows_checked + d2.rows_checked;
        const std::size_t matched = d1.rows_matched + d2.rows_matched;
        out << "rows matched: " << matched << "/" << checked << " (abs tol "
            << format_double(kTableAbsTol) << ")\n";
        if (matched != checked) {
            if (d1.first_mismatch_n) {
                err << "table1 first mismatch at row n=" << *d1.first_mismatch_n << "\n";
            } else if (d2.first_mismatch_n) {
                err << "table2 first mismatch at row n=" << *d2.first_mismatch_n << "\n";
            }
            return kTableMismatch;
        }
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

namespace detail {

inline json report_to_json(const PropertyCheckReport& report, const std::string& subject) {
    json j{{"subject", subject},
           {"property", property_name(report.property)},
           {"samples", report.samples},
           {"seed", report.seed},
           {"tolerance", report.tolerance},
           {"passed", report.passed}};
    json violations = json::array();
    for (const PropertyViolation& v : report.violations) {
        json witness = json::array();
        for (const Point& w : v.witness) witness.push_back(splitsolve::detail::point_to_json(w));
        violations.push_back(json{{"sample_index", v.sample_index},
                                  {"lhs", v.lhs},
                                  {"rhs", v.rhs},
                                  {"margin", v.margin},
                                  {"note", v.note},
                                  {"witness", std::move(witness)}});
    }
    j["violations"] = std::move(violations);
    return j;
}

inline void print_report(const PropertyCheckReport& report, const std::string& subject,
                         std::ostream& out) {
    out << subject << ": " << property_name(report.property) << " over " << report.samples
        << " samples (seed " << report.seed << ") -> " << (report.passed ? "PASS" : "FAIL")
        << "\n";
    if (!report.passed) {
        const PropertyViolation& v = report.violations.front();
        out << "  violations: " << report.violations.size() << "; first at sample "
            << v.sample_index << ", lhs=" << format_double(v.lhs)
            << ", rhs=" << format_double(v.rhs) << ", margin=" << format_double(v.margin);
        if (!v.note.empty()) out << " (" << v.note << ")";
        for (const Point& w : v.witness) {
            out << "\n  witness:";
            for (double c : w) out << ' ' << format_double(c);
        }
        out << "\n";
    }
}

inline BoxSampler make_sampler(const RunConfig& cfg, std::size_t dim) {
    std::vector<double> lo(dim, 0.0), hi(dim, 100.0);
    if (cfg.check_box_lo) {
        const auto& src = *cfg.check_box_lo;
        if (src.size() == 1) {
            lo.assign(dim, src[0]);
        } else if (src.size() == dim) {
            lo = src;
        } else {
            throw ConfigError("check.box_lo length must be 1 or match the space dimension");
        }
    }
    if (cfg.check_box_hi) {
        const auto& src = *cfg.check_box_hi;
        if (src.size() == 1) {
            hi.assign(dim, src[0]);
        } else if (src.size() == dim) {
            hi = src;
        } else {
            throw ConfigError("check.box_hi length must be 1 or match the space dimension");
        }
    }
    return BoxSampler(std::move(lo), std::move(hi));
}

}  // namespace detail

/// Run the property-check suite for the configured problem: declared fixed
/// points, quasi-nonexpansiveness of U and T, nonexpansiveness of the
/// projections onto C and Q, coupling consistency of a known solution, plus
/// any extra maps listed in the config.
inline int cmd_check(const RunConfig& cfg, std::uint64_t seed, std::ostream& out,
                     std::ostream& err) {
    try {
        const SffpepProblem problem = build_problem(cfg);
        bool all_passed = true;
        json exported = json::array();
        const auto consume = [&](const PropertyCheckReport& report, const std::string& subject) {
            detail::print_report(report, subject, out);
            exported.push_back(detail::report_to_json(report, subject));
            all_passed = all_passed && report.passed;
        };

        if (problem.known_solution) {
            consume(check_problem_consistency(problem), "problem");
        }

        const auto check_map = [&](const QuasiNonexpansiveMap& m, std::size_t dim,
                                   const std::string& subject) {
            if (!m.declared_fixed_point()) {
                out << subject << ": skipped (no declared fixed point)\n";
                return;
            }
            const BoxSampler sampler = detail::make_sampler(cfg, dim);
            const Point& q = *m.declared_fixed_point();
            consume(check_quasi_nonexpansive([&m](const Point& x) { return m.apply(x); }, q,
                                             sampler, cfg.check_samples, seed),
                    subject);
            if (cfg.check_firm) {
                consume(check_firmly_quasi_nonexpansive(
                            [&m](const Point& x) { return m.apply(x); }, q, sampler,
                            cfg.check_samples, seed),
                        subject + " (firm)");
            }
        };
        check_map(problem.U, problem.dim_x(), "map U");
        check_map(problem.T, problem.dim_y(), "map T");

        consume(check_projection_nonexpansive(problem.C,
                                              detail::make_sampler(cfg, problem.dim_x()),
                                              cfg.check_samples, seed),
                "projection onto C");
        consume(check_projection_nonexpansive(problem.Q,
                                              detail::make_sampler(cfg, problem.dim_y()),
                                              cfg.check_samples, seed),
                "projection onto Q");

        for (std::size_t i = 0; i < cfg.extra_maps.size(); ++i) {
            const auto& extra = cfg.extra_maps[i];
            const double factor = extra.factor;
            const MapFn fn = [factor](const Point& x) { return factor * x; };
            const BoxSampler sampler = detail::make_sampler(cfg, extra.fixed_point.dim());
            consume(check_quasi_nonexpansive(fn, extra.fixed_point, sampler, cfg.check_samples,
                                             seed),
                    "extra map " + std::to_string(i) + " (scaling by " +
                        format_double(factor) + ")");
        }

        out << (all_passed ? "all property checks passed\n" : "property violations found\n");
        if (cfg.report_path) write_file_atomic(*cfg.report_path, exported.dump(2) + "\n");
        return all_passed ? kOk : kPropertyViolation;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

/// Estimate the spectral radii of A^T A and B^T B and print the admissible
/// step-size bound.
inline int cmd_spectral(const RunConfig& cfg, std::uint64_t seed, std::ostream& out,
                        std::ostream& err) {
    try {
        const SffpepProblem problem = build_problem(cfg);
        const SpectralEstimate l1 = spectral_radius_gram(problem.A, 1e-12, 10000, seed);
        const SpectralEstimate l2 = spectral_radius_gram(problem.B, 1e-12, 10000, seed);
        out << "L1 = " << format_double(l1.value) << " (iterations " << l1.iterations_used
            << ", " << (l1.converged ? "converged" : "NOT converged") << ")\n";
        out << "L2 = " << format_double(l2.value) << " (iterations " << l2.iterations_used
            << ", " << (l2.converged ? "converged" : "NOT converged") << ")\n";
        if (!l1.converged || !l2.converged) {
            err << "spectral estimation did not converge within the iteration budget\n";
            return kSpectralFailure;
        }
        out << "step-size bound 2/(L1+L2) = " << format_double(step_size_bound(l1.value, l2.value))
            << "\n";
        return kOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

}  // namespace splitsolve::cli

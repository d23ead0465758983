#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "splitsolve/errors.hpp"
#include "splitsolve/problem.hpp"
#include "splitsolve/problem_library.hpp"
#include "splitsolve/schedule.hpp"
#include "splitsolve/schemes.hpp"

namespace splitsolve {

using json = nlohmann::json;

/// How a run names one of lambda/alpha/beta. Fraction is only meaningful for
/// lambda: it scales the computed step-size bound 2/(L1+L2).
struct ScheduleSpec {
    enum class Kind { Value, Fraction, Sequence, Harmonic };
    Kind kind = Kind::Value;
    double value = 0.0;
    std::vector<double> sequence;
    double base = 0.0;
    double floor = 0.0;

    static ScheduleSpec of(double v) {
        ScheduleSpec s;
        s.value = v;
        return s;
    }
};

struct PaperExampleSource {};

struct InlineSource {
    SffpepProblem problem;
};

using ProblemSource = std::variant<PaperExampleSource, SyntheticSpec, InlineSource>;

struct RunConfig {
    ProblemSource source = PaperExampleSource{};
    SchemeId scheme = SchemeId::Sffpep;
    ScheduleSpec lambda = ScheduleSpec::of(0.1);
    ScheduleSpec alpha = ScheduleSpec::of(0.5);
    ScheduleSpec beta = ScheduleSpec::of(0.5);
    std::size_t max_iters = 100000;
    double tol = 1e-8;
    bool validate_lambda = true;
    std::optional<Point> start_x;
    std::optional<Point> start_y;
    std::optional<std::uint64_t> seed;

    // Property-check options (cmd_check).
    std::size_t check_samples = 10000;
    std::optional<std::vector<double>> check_box_lo;
    std::optional<std::vector<double>> check_box_hi;
    bool check_firm = false;
    struct ExtraMap {
        std::string kind;  // "scaling" is the only extra kind
        double factor = 1.0;
        Point fixed_point;
    };
    std::vector<ExtraMap> extra_maps;

    std::optional<std::string> trace_path;
    std::optional<std::string> report_path;
};

namespace detail {

[[noreturn]] inline void bad_config(const std::string& message) { throw ConfigError(message); }

inline void expect_keys(const json& obj, const std::string& context,
                        std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) bad_config("config: unknown key \"" + key + "\" in " + context);
    }
}

inline const json& expect(const json& obj, const char* key, const std::string& context) {
    auto it = obj.find(key);
    if (it == obj.end()) bad_config("config: missing key \"" + std::string(key) + "\" in " + context);
    return *it;
}

inline std::vector<double> parse_number_array(const json& j, const std::string& context) {
    if (!j.is_array()) bad_config("config: " + context + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) bad_config("config: " + context + " must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

/// Bound arrays additionally accept "inf" / "-inf".
inline std::vector<double> parse_bound_array(const json& j, const std::string& context) {
    if (!j.is_array()) bad_config("config: " + context + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (v.is_number()) {
            out.push_back(v.get<double>());
        } else if (v.is_string()) {
            const std::string s = v.get<std::string>();
            if (s == "inf" || s == "+inf") {
                out.push_back(std::numeric_limits<double>::infinity());
            } else if (s == "-inf") {
                out.push_back(-std::numeric_limits<double>::infinity());
            } else {
                bad_config("config: " + context + " contains unrecognized bound \"" + s + "\"");
            }
        } else {
            bad_config("config: " + context + " must contain numbers or \"inf\"/\"-inf\"");
        }
    }
    return out;
}

inline Point parse_point(const json& j, const std::string& context) {
    return Point(parse_number_array(j, context));
}

inline DenseOperator parse_matrix(const json& j, const std::string& context) {
    if (!j.is_array() || j.empty()) bad_config("config: " + context + " must be a nested array");
    std::vector<std::vector<double>> rows;
    rows.reserve(j.size());
    for (const auto& row : j) rows.push_back(parse_number_array(row, context + " row"));
    return DenseOperator::from_rows(rows);
}

inline ConvexSet parse_set(const json& j, const std::string& context) {
    if (!j.is_object()) bad_config("config: " + context + " must be an object");
    const std::string kind = expect(j, "kind", context).get<std::string>();
    if (kind == "whole-space") {
        expect_keys(j, context, {"kind", "dim"});
        return ConvexSet::whole_space(expect(j, "dim", context).get<std::size_t>());
    }
    if (kind == "nonnegative-orthant") {
        expect_keys(j, context, {"kind", "dim"});
        return ConvexSet::nonnegative_orthant(expect(j, "dim", context).get<std::size_t>());
    }
    if (kind == "box") {
        expect_keys(j, context, {"kind", "lower", "upper"});
        return ConvexSet::box(parse_bound_array(expect(j, "lower", context), context + ".lower"),
                              parse_bound_array(expect(j, "upper", context), context + ".upper"));
    }
    if (kind == "ball") {
        expect_keys(j, context, {"kind", "center", "radius"});
        return ConvexSet::ball(parse_point(expect(j, "center", context), context + ".center"),
                               expect(j, "radius", context).get<double>());
    }
    if (kind == "half-space") {
        expect_keys(j, context, {"kind", "normal", "offset"});
        return ConvexSet::half_space(parse_point(expect(j, "normal", context), context + ".normal"),
                                     expect(j, "offset", context).get<double>());
    }
    if (kind == "affine-subspace") {
        expect_keys(j, context, {"kind", "basis", "shift"});
        return ConvexSet::affine_subspace(parse_matrix(expect(j, "basis", context), context + ".basis"),
                                          parse_point(expect(j, "shift", context), context + ".shift"));
    }
    bad_config("config: " + context + " has unrecognized set kind \"" + kind + "\"");
}

inline QuasiNonexpansiveMap parse_map(const json& j, const std::string& context) {
    if (!j.is_object()) bad_config("config: " + context + " must be an object");
    const std::string kind = expect(j, "kind", context).get<std::string>();
    QuasiNonexpansiveMap m = QuasiNonexpansiveMap::identity();
    if (kind == "identity") {
        expect_keys(j, context, {"kind", "fixed_point"});
    } else if (kind == "rational") {
        expect_keys(j, context, {"kind", "fixed_point"});
        m = QuasiNonexpansiveMap::rational();
    } else if (kind == "affine-shrink") {
        expect_keys(j, context, {"kind", "fixed_point"});
        m = QuasiNonexpansiveMap::affine_shrink();
    } else if (kind == "contraction") {
        expect_keys(j, context, {"kind", "anchor", "ratio", "fixed_point"});
        m = QuasiNonexpansiveMap::contraction_toward(
            parse_point(expect(j, "anchor", context), context + ".anchor"),
            expect(j, "ratio", context).get<double>());
    } else if (kind == "projection") {
        expect_keys(j, context, {"kind", "set", "fixed_point"});
        m = QuasiNonexpansiveMap::projection(parse_set(expect(j, "set", context), context + ".set"));
    } else if (kind == "relaxed") {
        expect_keys(j, context, {"kind", "base", "theta", "fixed_point"});
        m = QuasiNonexpansiveMap::relaxed(parse_map(expect(j, "base", context), context + ".base"),
                                          expect(j, "theta", context).get<double>());
    } else {
        bad_config("config: " + context + " has unrecognized map kind \"" + kind + "\"");
    }
    if (j.contains("fixed_point")) {
        m = m.with_fixed_point(parse_point(j["fixed_point"], context + ".fixed_point"));
    }
    return m;
}

inline ScheduleSpec parse_schedule_spec(const json& j, const std::string& context,
                                        bool allow_fraction) {
    ScheduleSpec spec;
    if (j.is_number()) {
        spec.kind = ScheduleSpec::Kind::Value;
        spec.value = j.get<double>();
        return spec;
    }
    if (!j.is_object()) bad_config("config: " + context + " must be a number or an object");
    expect_keys(j, context, {"fraction", "sequence", "harmonic"});
    if (j.contains("fraction")) {
        if (!allow_fraction) bad_config("config: " + context + " does not accept \"fraction\"");
        spec.kind = ScheduleSpec::Kind::Fraction;
        spec.value = j["fraction"].get<double>();
        return spec;
    }
    if (j.contains("sequence")) {
        spec.kind = ScheduleSpec::Kind::Sequence;
        spec.sequence = parse_number_array(j["sequence"], context + ".sequence");
        return spec;
    }
    if (j.contains("harmonic")) {
        const json& h = j["harmonic"];
        expect_keys(h, context + ".harmonic", {"base", "floor"});
        spec.kind = ScheduleSpec::Kind::Harmonic;
        spec.base = expect(h, "base", context).get<double>();
        spec.floor = expect(h, "floor", context).get<double>();
        return spec;
    }
    bad_config("config: " + context + " must name fraction, sequence or harmonic");
}

}  // namespace detail

inline RunConfig parse_config(const json& root) {
    using detail::bad_config;
    if (!root.is_object()) detail::bad_config("config: top level must be an object");
    detail::expect_keys(root, "top level",
                        {"problem", "scheme", "params", "start", "seed", "check", "output"});
    RunConfig cfg;

    const json& problem = detail::expect(root, "problem", "top level");
    if (!problem.is_object()) detail::bad_config("config: problem must be an object");
    if (problem.contains("builtin")) {
        const std::string name = problem["builtin"].get<std::string>();
        if (name == "paper-example") {
            detail::expect_keys(problem, "problem", {"builtin"});
            cfg.source = PaperExampleSource{};
        } else if (name == "synthetic") {
            detail::expect_keys(problem, "problem",
                                {"builtin", "n1", "n2", "n3", "seed", "conditioning", "rho"});
            SyntheticSpec spec;
            if (problem.contains("n1")) spec.n1 = problem["n1"].get<std::size_t>();
            if (problem.contains("n2")) spec.n2 = problem["n2"].get<std::size_t>();
            if (problem.contains("n3")) spec.n3 = problem["n3"].get<std::size_t>();
            if (problem.contains("seed")) spec.seed = problem["seed"].get<std::uint64_t>();
            if (problem.contains("conditioning")) {
                spec.conditioning = problem["conditioning"].get<double>();
            }
            if (problem.contains("rho")) spec.contraction_rho = problem["rho"].get<double>();
            cfg.source = spec;
        } else {
            detail::bad_config("config: unknown builtin problem \"" + name + "\"");
        }
    } else if (problem.contains("inline")) {
        detail::expect_keys(problem, "problem", {"inline"});
        const json& in = problem["inline"];
        detail::expect_keys(in, "problem.inline",
                            {"A", "B", "C", "Q", "U", "T", "known_solution"});
        DenseOperator A = detail::parse_matrix(detail::expect(in, "A", "problem.inline"),
                                               "problem.inline.A");
        DenseOperator B = detail::parse_matrix(detail::expect(in, "B", "problem.inline"),
                                               "problem.inline.B");
        ConvexSet C = in.contains("C") ? detail::parse_set(in["C"], "problem.inline.C")
                                       : ConvexSet::whole_space(A.domain_dim());
        ConvexSet Q = in.contains("Q") ? detail::parse_set(in["Q"], "problem.inline.Q")
                                       : ConvexSet::whole_space(B.domain_dim());
        QuasiNonexpansiveMap U = in.contains("U")
                                     ? detail::parse_map(in["U"], "problem.inline.U")
                                     : QuasiNonexpansiveMap::identity();
        QuasiNonexpansiveMap T = in.contains("T")
                                     ? detail::parse_map(in["T"], "problem.inline.T")
                                     : QuasiNonexpansiveMap::identity();
        std::optional<std::pair<Point, Point>> known;
        if (in.contains("known_solution")) {
            const json& ks = in["known_solution"];
            detail::expect_keys(ks, "problem.inline.known_solution", {"x", "y"});
            known = std::make_pair(
                detail::parse_point(detail::expect(ks, "x", "known_solution"),
                                    "known_solution.x"),
                detail::parse_point(detail::expect(ks, "y", "known_solution"),
                                    "known_solution.y"));
        }
        InlineSource src{SffpepProblem{std::move(C), std::move(Q), std::move(U), std::move(T),
                                       std::move(A), std::move(B), std::move(known)}};
        validate_problem(src.problem);
        cfg.source = std::move(src);
    } else {
        detail::bad_config("config: problem must name \"builtin\" or \"inline\"");
    }

    if (root.contains("scheme")) {
        const std::string name = root["scheme"].get<std::string>();
        const auto id = parse_scheme(name);
        if (!id) detail::bad_config("config: unknown scheme \"" + name + "\"");
        cfg.scheme = *id;
    }

    if (root.contains("params")) {
        const json& params = root["params"];
        detail::expect_keys(params, "params",
                            {"lambda", "alpha", "beta", "max_iters", "tol", "validate_lambda"});
        if (params.contains("lambda")) {
            cfg.lambda = detail::parse_schedule_spec(params["lambda"], "params.lambda", true);
        }
        if (params.contains("alpha")) {
            cfg.alpha = detail::parse_schedule_spec(params["alpha"], "params.alpha", false);
        }
        if (params.contains("beta")) {
            cfg.beta = detail::parse_schedule_spec(params["beta"], "params.beta", false);
        }
        if (params.contains("max_iters")) cfg.max_iters = params["max_iters"].get<std::size_t>();
        if (params.contains("tol")) cfg.tol = params["tol"].get<double>();
        if (params.contains("validate_lambda")) {
            cfg.validate_lambda = params["validate_lambda"].get<bool>();
        }
    }

    if (root.contains("start")) {
        const json& start = root["start"];
        detail::expect_keys(start, "start", {"x", "y"});
        if (start.contains("x")) cfg.start_x = detail::parse_point(start["x"], "start.x");
        if (start.contains("y")) cfg.start_y = detail::parse_point(start["y"], "start.y");
    }

    if (root.contains("seed")) cfg.seed = root["seed"].get<std::uint64_t>();

    if (root.contains("check")) {
        const json& check = root["check"];
        detail::expect_keys(check, "check",
                            {"samples", "box_lo", "box_hi", "firm", "extra_maps"});
        if (check.contains("samples")) cfg.check_samples = check["samples"].get<std::size_t>();
        if (check.contains("box_lo")) {
            cfg.check_box_lo = detail::parse_number_array(check["box_lo"], "check.box_lo");
        }
        if (check.contains("box_hi")) {
            cfg.check_box_hi = detail::parse_number_array(check["box_hi"], "check.box_hi");
        }
        if (check.contains("firm")) cfg.check_firm = check["firm"].get<bool>();
        if (check.contains("extra_maps")) {
            for (const auto& em : check["extra_maps"]) {
                detail::expect_keys(em, "check.extra_maps", {"kind", "factor", "fixed_point"});
                RunConfig::ExtraMap extra;
                extra.kind = detail::expect(em, "kind", "check.extra_maps").get<std::string>();
                if (extra.kind != "scaling") {
                    detail::bad_config("config: check.extra_maps kind must be \"scaling\"");
                }
                extra.factor = detail::expect(em, "factor", "check.extra_maps").get<double>();
                extra.fixed_point = detail::parse_point(
                    detail::expect(em, "fixed_point", "check.extra_maps"),
                    "check.extra_maps.fixed_point");
                cfg.extra_maps.push_back(std::move(extra));
            }
        }
    }

    if (root.contains("output")) {
        const json& output = root["output"];
        detail::expect_keys(output, "output", {"trace", "report"});
        if (output.contains("trace")) cfg.trace_path = output["trace"].get<std::string>();
        if (output.contains("report")) cfg.report_path = output["report"].get<std::string>();
    }
    return cfg;
}

inline RunConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    return parse_config(root);
}

namespace detail {

inline json bound_to_json(double v) {
    if (v == std::numeric_limits<double>::infinity()) return "inf";
    if (v == -std::numeric_limits<double>::infinity()) return "-inf";
    return v;
}

inline json point_to_json(const Point& p) {
    json arr = json::array();
    for (double c : p) arr.push_back(c);
    return arr;
}

inline json matrix_to_json(const DenseOperator& op) {
    json rows = json::array();
    for (std::size_t i = 0; i < op.codomain_dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < op.domain_dim(); ++j) row.push_back(op.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json set_to_json(const ConvexSet& set) {
    json j{{"kind", set.kind_name()}};
    switch (set.kind()) {
        case ConvexSet::Kind::WholeSpace:
        case ConvexSet::Kind::NonnegativeOrthant:
            j["dim"] = set.dim();
            break;
        case ConvexSet::Kind::Box: {
            json lo = json::array(), hi = json::array();
            for (double v : set.box_lower()) lo.push_back(bound_to_json(v));
            for (double v : set.box_upper()) hi.push_back(bound_to_json(v));
            j["lower"] = std::move(lo);
            j["upper"] = std::move(hi);
            break;
        }
        case ConvexSet::Kind::Ball:
            j["center"] = point_to_json(set.ball_center());
            j["radius"] = set.ball_radius();
            break;
        case ConvexSet::Kind::HalfSpace:
            j["normal"] = point_to_json(set.half_space_normal());
            j["offset"] = set.half_space_offset();
            break;
        case ConvexSet::Kind::AffineSubspace:
            throw ConfigError("config: affine-subspace sets cannot be re-serialized");
    }
    return j;
}

inline json map_to_json(const QuasiNonexpansiveMap& m) {
    json j{{"kind", m.kind_name()}};
    switch (m.kind()) {
        case QuasiNonexpansiveMap::Kind::Identity:
        case QuasiNonexpansiveMap::Kind::Rational:
        case QuasiNonexpansiveMap::Kind::AffineShrink:
            break;
        case QuasiNonexpansiveMap::Kind::ContractionToward:
            j["anchor"] = point_to_json(m.contraction_anchor());
            j["ratio"] = m.contraction_ratio();
            break;
        case QuasiNonexpansiveMap::Kind::Projection:
            j["set"] = set_to_json(m.projection_set());
            break;
        case QuasiNonexpansiveMap::Kind::Relaxed:
            j["base"] = map_to_json(m.relaxed_base());
            j["theta"] = m.relaxed_theta();
            break;
    }
    if (m.declared_fixed_point()) j["fixed_point"] = point_to_json(*m.declared_fixed_point());
    return j;
}

inline json schedule_spec_to_json(const ScheduleSpec& spec) {
    switch (spec.kind) {
        case ScheduleSpec::Kind::Value:
            return spec.value;
        case ScheduleSpec::Kind::Fraction:
            return json{{"fraction", spec.value}};
        case ScheduleSpec::Kind::Sequence:
            return json{{"sequence", spec.sequence}};
        case ScheduleSpec::Kind::Harmonic:
            return json{{"harmonic", {{"base", spec.base}, {"floor", spec.floor}}}};
    }
    throw Error("schedule_spec_to_json: unreachable");
}

}  // namespace detail

inline json serialize_config(const RunConfig& cfg) {
    json root;
    if (std::holds_alternative<PaperExampleSource>(cfg.source)) {
        root["problem"] = {{"builtin", "paper-example"}};
    } else if (const auto* spec = std::get_if<SyntheticSpec>(&cfg.source)) {
        root["problem"] = {{"builtin", "synthetic"},   {"n1", spec->n1},
                           {"n2", spec->n2},           {"n3", spec->n3},
                           {"seed", spec->seed},       {"conditioning", spec->conditioning},
                           {"rho", spec->contraction_rho}};
    } else {
        const auto& p = std::get<InlineSource>(cfg.source).problem;
        json in{{"A", detail::matrix_to_json(p.A)}, {"B", detail::matrix_to_json(p.B)},
                {"C", detail::set_to_json(p.C)},    {"Q", detail::set_to_json(p.Q)},
                {"U", detail::map_to_json(p.U)},    {"T", detail::map_to_json(p.T)}};
        if (p.known_solution) {
            in["known_solution"] = {{"x", detail::point_to_json(p.known_solution->first)},
                                    {"y", detail::point_to_json(p.known_solution->second)}};
        }
        root["problem"] = {{"inline", std::move(in)}};
    }
    root["scheme"] = std::string(scheme_name(cfg.scheme));
    root["params"] = {{"lambda", detail::schedule_spec_to_json(cfg.lambda)},
                      {"alpha", detail::schedule_spec_to_json(cfg.alpha)},
                      {"beta", detail::schedule_spec_to_json(cfg.beta)},
                      {"max_iters", cfg.max_iters},
                      {"tol", cfg.tol},
                      {"validate_lambda", cfg.validate_lambda}};
    if (cfg.start_x || cfg.start_y) {
        json start;
        if (cfg.start_x) start["x"] = detail::point_to_json(*cfg.start_x);
        if (cfg.start_y) start["y"] = detail::point_to_json(*cfg.start_y);
        root["start"] = std::move(start);
    }
    if (cfg.seed) root["seed"] = *cfg.seed;
    if (cfg.trace_path || cfg.report_path) {
        json output;
        if (cfg.trace_path) output["trace"] = *cfg.trace_path;
        if (cfg.report_path) output["report"] = *cfg.report_path;
        root["output"] = std::move(output);
    }
    return root;
}

/// Materialize the configured problem.
inline SffpepProblem build_problem(const RunConfig& cfg) {
    if (std::holds_alternative<PaperExampleSource>(cfg.source)) {
        return build_paper_example().problem;
    }
    if (const auto* spec = std::get_if<SyntheticSpec>(&cfg.source)) {
        return generate_synthetic(*spec);
    }
    return std::get<InlineSource>(cfg.source).problem;
}

/// Resolve the schedule specs against the problem's spectral bound and return
/// solver-ready parameters.
inline SolverParams build_params(const RunConfig& cfg, const SffpepProblem& problem,
                                 std::uint64_t seed) {
    const SpectralEstimate l1 = spectral_radius_gram(problem.A, 1e-12, 10000, seed);
    const SpectralEstimate l2 = spectral_radius_gram(problem.B, 1e-12, 10000, seed);
    if (!l1.converged || !l2.converged) {
        throw NumericError("spectral radius estimation did not converge");
    }
    const double bound = step_size_bound(l1.value, l2.value);

    const auto materialize = [](const ScheduleSpec& spec, double fraction_scale) {
        switch (spec.kind) {
            case ScheduleSpec::Kind::Value:
                return Schedule::constant(spec.value);
            case ScheduleSpec::Kind::Fraction:
                return Schedule::constant(spec.value * fraction_scale);
            case ScheduleSpec::Kind::Sequence:
                return Schedule::sequence(spec.sequence);
            case ScheduleSpec::Kind::Harmonic:
                return Schedule::harmonic(spec.base, spec.floor);
        }
        throw Error("materialize schedule: unreachable");
    };

    SolverParams params;
    if (cfg.validate_lambda && cfg.lambda.kind == ScheduleSpec::Kind::Fraction &&
        !(cfg.lambda.value > 0.0 && cfg.lambda.value < 1.0)) {
        throw ConfigError("params.lambda.fraction = " + std::to_string(cfg.lambda.value) +
                          " must lie in (0,1): the admissible step sizes form the open interval" +
                          " (0, 2/(L1+L2)) = (0, " + std::to_string(bound) + ")");
    }
    params.lambda = materialize(cfg.lambda, bound).with_bounds(0.0, bound);
    params.alpha = materialize(cfg.alpha, 1.0).with_bounds(0.0, 1.0);
    params.beta = materialize(cfg.beta, 1.0).with_bounds(0.0, 1.0);
    params.max_iters = cfg.max_iters;
    params.residual_tol = cfg.tol;
    params.validate_lambda = cfg.validate_lambda;
    return params;
}

/// Starting iterates: configured ones if present, otherwise (10, 15) for the
/// bundled example (the reference tables' start) and zeros elsewhere.
inline std::pair<Point, Point> build_start(const RunConfig& cfg, const SffpepProblem& problem) {
    Point x0 = cfg.start_x ? *cfg.start_x
               : std::holds_alternative<PaperExampleSource>(cfg.source)
                   ? Point{10.0}
                   : Point::zeros(problem.dim_x());
    Point y0 = cfg.start_y ? *cfg.start_y
               : std::holds_alternative<PaperExampleSource>(cfg.source)
                   ? Point{15.0}
                   : Point::zeros(problem.dim_y());
    return {std::move(x0), std::move(y0)};
}

}  // namespace splitsolve

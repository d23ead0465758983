#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "splitsolve/cli.hpp"
#include "splitsolve/config.hpp"

using namespace splitsolve;

namespace {

const char* kInlineConfig = R"({
  "problem": {
    "inline": {
      "A": [[1.0]],
      "B": [[4.0]],
      "C": {"kind": "box", "lower": [0.0], "upper": ["inf"]},
      "Q": {"kind": "nonnegative-orthant", "dim": 1},
      "U": {"kind": "rational", "fixed_point": [5.0]},
      "T": {"kind": "affine-shrink", "fixed_point": [1.25]},
      "known_solution": {"x": [5.0], "y": [1.25]}
    }
  },
  "scheme": "sffpep",
  "params": {"lambda": 0.1, "alpha": 0.2, "beta": 0.125, "max_iters": 5000, "tol": 1e-6},
  "start": {"x": [10.0], "y": [15.0]},
  "seed": 7,
  "output": {"trace": "out.csv"}
})";

}  // namespace

TEST_CASE("parse a full inline config") {
    const RunConfig cfg = parse_config_text(kInlineConfig);
    CHECK(cfg.scheme == SchemeId::Sffpep);
    CHECK(cfg.lambda.kind == ScheduleSpec::Kind::Value);
    CHECK(cfg.lambda.value == 0.1);
    CHECK(cfg.max_iters == 5000);
    CHECK(cfg.tol == 1e-6);
    CHECK(cfg.seed == 7);
    REQUIRE(cfg.start_x);
    CHECK((*cfg.start_x)[0] == 10.0);
    REQUIRE(cfg.trace_path);
    CHECK(*cfg.trace_path == "out.csv");

    const SffpepProblem p = build_problem(cfg);
    CHECK(p.A.at(0, 0) == 1.0);
    CHECK(p.B.at(0, 0) == 4.0);
    CHECK(p.C.kind() == ConvexSet::Kind::Box);
    REQUIRE(p.known_solution);
}

TEST_CASE("builtin problem sources") {
    SECTION("paper-example") {
        const RunConfig cfg = parse_config_text(R"({"problem": {"builtin": "paper-example"}})");
        const SffpepProblem p = build_problem(cfg);
        CHECK(p.B.at(0, 0) == 4.0);
        const auto [x0, y0] = build_start(cfg, p);
        CHECK(x0[0] == 10.0);
        CHECK(y0[0] == 15.0);
    }
    SECTION("synthetic") {
        const RunConfig cfg = parse_config_text(
            R"({"problem": {"builtin": "synthetic", "n1": 3, "n2": 4, "n3": 5,
                "seed": 9, "conditioning": 5.0, "rho": 0.3}})");
        const SffpepProblem p = build_problem(cfg);
        CHECK(p.dim_x() == 3);
        CHECK(p.dim_y() == 4);
        const auto [x0, y0] = build_start(cfg, p);
        CHECK(norm(x0) == 0.0);
        CHECK(y0.dim() == 4);
    }
    SECTION("unknown builtin") {
        CHECK_THROWS_AS(parse_config_text(R"({"problem": {"builtin": "nope"}})"), ConfigError);
    }
}

TEST_CASE("unknown keys are rejected with the offending key named") {
    CHECK_THROWS_WITH(
        parse_config_text(R"({"problem": {"builtin": "paper-example"}, "typo_key": 1})"),
        Catch::Matchers::ContainsSubstring("typo_key"));
    CHECK_THROWS_WITH(
        parse_config_text(
            R"({"problem": {"builtin": "paper-example"}, "params": {"lambdas": 0.1}})"),
        Catch::Matchers::ContainsSubstring("lambdas"));
    CHECK_THROWS_WITH(
        parse_config_text(
            R"({"problem": {"inline": {"A": [[1]], "B": [[1]], "extra": 0}}})"),
        Catch::Matchers::ContainsSubstring("extra"));
}

TEST_CASE("malformed configs raise config errors") {
    CHECK_THROWS_AS(parse_config_text("not json"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"scheme": "sffpep"})"), ConfigError);  // no problem
    CHECK_THROWS_AS(parse_config_text(R"({"problem": {"builtin": "paper-example"},
                                          "scheme": "unknown-scheme"})"),
                    ConfigError);
}

TEST_CASE("config round-trips through serialization") {
    for (const char* text : {kInlineConfig,
                             R"({"problem": {"builtin": "synthetic", "n1": 2, "n2": 2, "n3": 2,
                                 "seed": 5, "conditioning": 3.0, "rho": 0.5},
                                 "scheme": "moudafi",
                                 "params": {"lambda": {"fraction": 0.5}, "alpha": 0.9,
                                            "beta": {"sequence": [0.5, 0.25]},
                                            "validate_lambda": false}})"}) {
        const RunConfig once = parse_config_text(text);
        const json serialized = serialize_config(once);
        const RunConfig twice = parse_config(serialized);
        CHECK(serialize_config(twice) == serialized);
    }
}

TEST_CASE("schedule specs materialize against the spectral bound") {
    const RunConfig cfg = parse_config_text(
        R"({"problem": {"builtin": "paper-example"},
            "params": {"lambda": {"fraction": 0.5}, "alpha": 0.2, "beta": 0.125}})");
    const SffpepProblem p = build_problem(cfg);
    const SolverParams params = build_params(cfg, p, 42);
    CHECK(params.lambda.at(1) == Catch::Approx(1.0 / 17.0).margin(1e-10));

    SECTION("fraction outside (0,1) with validation on cites the bound") {
        RunConfig bad = cfg;
        bad.lambda.value = 1.2;
        CHECK_THROWS_WITH(build_params(bad, p, 42),
                          Catch::Matchers::ContainsSubstring("2/(L1+L2)"));
    }
    SECTION("fraction outside (0,1) is allowed when validation is off") {
        RunConfig loose = cfg;
        loose.lambda.value = 1.2;
        loose.validate_lambda = false;
        const SolverParams lp = build_params(loose, p, 42);
        CHECK(lp.lambda.at(1) == Catch::Approx(1.2 * 2.0 / 17.0).margin(1e-10));
    }
}

TEST_CASE("harmonic and sequence schedules parse") {
    const RunConfig cfg = parse_config_text(
        R"({"problem": {"builtin": "paper-example"},
            "params": {"lambda": 0.05,
                       "alpha": {"harmonic": {"base": 0.9, "floor": 0.1}},
                       "beta": {"sequence": [0.5, 0.25, 0.125]}}})");
    const SffpepProblem p = build_problem(cfg);
    const SolverParams params = build_params(cfg, p, 42);
    CHECK(params.alpha.at(1) == 0.9);
    CHECK(params.alpha.at(9) == 0.1);
    CHECK(params.beta.at(2) == 0.25);
    CHECK(params.beta.at(100) == 0.125);
}

TEST_CASE("check section parses counterexample maps") {
    const RunConfig cfg = parse_config_text(
        R"({"problem": {"builtin": "paper-example"},
            "check": {"samples": 500, "box_lo": [0.0], "box_hi": [100.0],
                      "extra_maps": [{"kind": "scaling", "factor": 2.0, "fixed_point": [0.0]}]}})");
    CHECK(cfg.check_samples == 500);
    REQUIRE(cfg.extra_maps.size() == 1);
    CHECK(cfg.extra_maps[0].factor == 2.0);
}

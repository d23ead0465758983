#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "splitsolve/cli.hpp"
#include "splitsolve/config.hpp"

namespace {

using namespace splitsolve;

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

/// Seed precedence: --seed flag, then the config file, then SPLITSOLVE_SEED,
/// then 42.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag,
                           const std::optional<std::uint64_t>& from_config) {
    if (flag) return *flag;
    if (from_config) return *from_config;
    if (const char* env = std::getenv("SPLITSOLVE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ConfigError(std::string("SPLITSOLVE_SEED is not an integer: ") + env);
        }
    }
    return 42;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"splitsolve: solvers for split feasibility / fixed-point equality problems"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed_flag;
    std::optional<std::size_t> max_iters_flag;
    std::optional<double> tol_flag;
    std::optional<std::string> trace_flag;
    std::optional<std::string> fixture1, fixture2;

    CLI::App* solve_cmd = app.add_subcommand("solve", "run a scheme from a config file");
    solve_cmd->add_option("config", config_path, "JSON config")->required();
    solve_cmd->add_option("--trace", trace_flag, "trace CSV output path (overrides config)");
    solve_cmd->add_option("--max-iters", max_iters_flag, "iteration cap (overrides config)");
    solve_cmd->add_option("--tol", tol_flag, "residual tolerance (overrides config)");
    solve_cmd->add_option("--seed", seed_flag, "seed (overrides config)");

    CLI::App* tables_cmd =
        app.add_subcommand("reproduce-tables", "check the recurrence against the golden tables");
    tables_cmd->add_option("--fixture1", fixture1, "external n,x,y fixture CSV for table 1");
    tables_cmd->add_option("--fixture2", fixture2, "external n,x,y fixture CSV for table 2");

    CLI::App* check_cmd = app.add_subcommand("check", "run the property-check suite");
    check_cmd->add_option("config", config_path, "JSON config")->required();
    check_cmd->add_option("--seed", seed_flag, "seed (overrides config)");

    CLI::App* spectral_cmd =
        app.add_subcommand("spectral", "print spectral radii and the step-size bound");
    spectral_cmd->add_option("config", config_path, "JSON config")->required();
    spectral_cmd->add_option("--seed", seed_flag, "seed (overrides config)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tables_cmd->parsed()) {
            return cli::cmd_reproduce_tables(std::cout, std::cerr, fixture1, fixture2);
        }
        RunConfig cfg = load_config(config_path);
        if (max_iters_flag) cfg.max_iters = *max_iters_flag;
        if (tol_flag) cfg.tol = *tol_flag;
        if (trace_flag) cfg.trace_path = trace_flag;
        const std::uint64_t seed = resolve_seed(seed_flag, cfg.seed);

        if (solve_cmd->parsed()) return cli::cmd_solve(cfg, seed, std::cout, std::cerr);
        if (check_cmd->parsed()) return cli::cmd_check(cfg, seed, std::cout, std::cerr);
        if (spectral_cmd->parsed()) return cli::cmd_spectral(cfg, seed, std::cout, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kConfigError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kConfigError;
    }
    return cli::kConfigError;
}

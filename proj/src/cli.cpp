/*
   Copyright 2026 The vanet-outage Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "vanet/cli.hpp"

#include "vanet/table_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace vanet::cli {

namespace {

using nlohmann::json;

ScalarDist dist_from_json(const json& j, const char* what)
{
    if (j.is_number())
        return ScalarDist::deterministic(j.get<double>());
    if (j.is_array() && j.size() == 2)
        return ScalarDist::uniform(j[0].get<double>(), j[1].get<double>());
    throw ConfigError(std::string("model.") + what + " must be a number or a [lo, hi] pair");
}

ModelSpec model_from_json(const json& j)
{
    const auto kind = j.value("kind", std::string("custom"));
    const auto label = j.value("label", std::string("model"));
    if (kind == "random_full")
        return ModelSpec::random_full(label);
    if (kind == "random_sector")
        return ModelSpec::random_sector(j.at("theta_lo").get<double>(), j.at("theta_hi").get<double>(), label);
    if (kind == "random_limited")
        return ModelSpec::random_limited(j.at("theta_lo").get<double>(), j.at("theta_hi").get<double>(), label);
    if (kind == "vehicular_full")
        return ModelSpec::vehicular_full(label);
    if (kind == "vehicular_lanes")
        return ModelSpec::vehicular_lanes(j.at("n_lanes").get<int>(), j.at("lane_width_m").get<double>(), label);
    if (kind == "custom")
        return ModelSpec::custom(dist_from_json(j.at("x"), "x"), dist_from_json(j.at("theta"), "theta"), label);
    throw ConfigError("unknown model kind: " + kind);
}

struct TauOverride
{
    std::optional<double> min, max, step;
};

struct ParamOverride
{
    std::optional<double> gamma, lambda, range_m, vmin_kmh, vmax_kmh;
};

void apply_config_file(const std::filesystem::path& path, RunConfig& cfg, TauOverride& tau, ParamOverride& params,
                       std::optional<std::uint64_t>& seed)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
    }
    try {
        if (j.contains("scenario"))
            cfg.scenario = j["scenario"].get<std::string>();
        if (j.contains("model")) {
            cfg.inline_model = model_from_json(j["model"]);
            cfg.inline_name = j.value("name", std::string("inline"));
        }
        if (j.contains("engine"))
            cfg.engine = j["engine"].get<std::string>();
        if (j.contains("quadrature")) {
            const auto& q = j["quadrature"];
            cfg.quadrature.abs_tol = q.value("abs_tol", cfg.quadrature.abs_tol);
            cfg.quadrature.max_subdivisions = q.value("max_subdivisions", cfg.quadrature.max_subdivisions);
        }
        if (j.contains("trials")) {
            const auto& t = j["trials"];
            cfg.trials.n_trials = t.value("n_trials", cfg.trials.n_trials);
            cfg.trials.n_partitions = t.value("n_partitions", cfg.trials.n_partitions);
            if (t.contains("seed"))
                seed = t["seed"].get<std::uint64_t>();
        }
        if (j.contains("tau")) {
            const auto& t = j["tau"];
            if (t.contains("min")) tau.min = t["min"].get<double>();
            if (t.contains("max")) tau.max = t["max"].get<double>();
            if (t.contains("step")) tau.step = t["step"].get<double>();
        }
        if (j.contains("params")) {
            const auto& p = j["params"];
            if (p.contains("gamma")) params.gamma = p["gamma"].get<double>();
            if (p.contains("lambda")) params.lambda = p["lambda"].get<double>();
            if (p.contains("range_m")) params.range_m = p["range_m"].get<double>();
            if (p.contains("vmin_kmh")) params.vmin_kmh = p["vmin_kmh"].get<double>();
            if (p.contains("vmax_kmh")) params.vmax_kmh = p["vmax_kmh"].get<double>();
        }
        if (j.contains("out_dir"))
            cfg.out_dir = j["out_dir"].get<std::string>();
    } catch (const json::exception& e) {
        throw ConfigError("invalid config value: " + std::string(e.what()));
    }
}

bool ci_mode()
{
    const char* ci = std::getenv("CI");
    return ci && *ci && std::string_view(ci) != "0" && std::string_view(ci) != "false";
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw ConfigError("cannot write " + path.string());
    return os;
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    auto os = open_output(path);
    os << content;
    if (!os)
        throw ConfigError("write failed: " + path.string());
}

void prepare_out_dir(const RunConfig& cfg)
{
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec || !std::filesystem::is_directory(cfg.out_dir))
        throw ConfigError("cannot create output directory " + cfg.out_dir.string());
}

void require_one_source(const RunConfig& cfg)
{
    if (cfg.scenario.has_value() == cfg.inline_model.has_value())
        throw ConfigError("give exactly one of --scenario or an inline model in --config");
}

struct NamedModel
{
    std::string scenario;
    MobilityModel model;
};

/// Models selected by the config, materialized against its parameters.
std::vector<NamedModel> selected_models(const RunConfig& cfg)
{
    require_one_source(cfg);
    std::vector<NamedModel> out;
    if (cfg.inline_model) {
        out.push_back({cfg.inline_name, builtin_model(*cfg.inline_model, cfg.params)});
        return out;
    }
    const auto sc = builtin_scenario(*cfg.scenario);
    for (const auto& spec : sc.random_family)
        out.push_back({sc.name, builtin_model(spec, cfg.params)});
    out.push_back({sc.name, builtin_model(sc.vehicular, cfg.params)});
    return out;
}

std::filesystem::path curve_path(const RunConfig& cfg, const NamedModel& m, const char* suffix)
{
    return cfg.out_dir / (m.scenario + "_" + m.model.label() + "_" + suffix + ".csv");
}

void write_curve(const std::filesystem::path& path, const OutageCurve& curve, const NamedModel& m)
{
    auto os = open_output(path);
    write_curve_csv(os, curve, m.scenario + "/" + m.model.label());
    if (!os)
        throw ConfigError("write failed: " + path.string());
}

bool is_fully_random(const MobilityModel& m)
{
    return m.x().lo() == -1.0 && m.x().hi() == 1.0 && !m.theta().is_deterministic() &&
           m.theta().width() >= kTwoPi * (1.0 - 1e-12);
}

} // namespace

RunConfig parse_args(const std::vector<std::string>& args)
{
    CLI::App app{"Outage probability of two-vehicle cooperative caching under parameterized mobility"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> scenario, engine, config_path, out_dir;
    TauOverride tau;
    ParamOverride params;
    std::optional<std::uint64_t> trials, seed, partitions;

    app.add_option("--scenario", scenario, "Built-in scenario (fig4, fig5, fig6, fig7)");
    app.add_option("--config", config_path, "JSON run configuration; flags override its values");
    app.add_option("--engine", engine, "analyze: quadrature|closed_form; compare: quadrature|monte_carlo");
    app.add_option("--tau-min", tau.min, "First horizon (s)");
    app.add_option("--tau-max", tau.max, "Last horizon (s)");
    app.add_option("--tau-step", tau.step, "Horizon step (s)");
    app.add_option("--trials", trials, "Monte Carlo trials per point");
    app.add_option("--seed", seed, "Monte Carlo seed (falls back to $VANET_OUTAGE_SEED)");
    app.add_option("--partitions", partitions, "Monte Carlo trial partitions");
    app.add_option("--out-dir", out_dir, "Output directory");
    app.add_option("--gamma", params.gamma, "Request overlap ratio");
    app.add_option("--lambda", params.lambda, "Request rate (1/s)");
    app.add_option("--range", params.range_m, "Radio range (m)");
    app.add_option("--vmin-kmh", params.vmin_kmh, "Minimum speed (km/h)");
    app.add_option("--vmax-kmh", params.vmax_kmh, "Maximum speed (km/h)");

    app.add_subcommand("analyze", "Analytical outage curves (CSV)");
    app.add_subcommand("simulate", "Monte Carlo outage curves (CSV)");
    app.add_subcommand("compare", "Random vs vehicular comparison (CSV, SVG, summary)");
    app.add_subcommand("list-scenarios", "List built-in scenarios");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw ConfigError(app.help());
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();

    TauOverride file_tau;
    ParamOverride file_params;
    std::optional<std::uint64_t> file_seed;
    if (config_path)
        apply_config_file(*config_path, cfg, file_tau, file_params, file_seed);

    if (scenario) {
        cfg.scenario = scenario;
        cfg.inline_model.reset();
    }
    if (engine)
        cfg.engine = engine;
    if (trials)
        cfg.trials.n_trials = *trials;
    if (partitions)
        cfg.trials.n_partitions = *partitions;
    if (out_dir)
        cfg.out_dir = *out_dir;

    if (seed) {
        cfg.trials.seed = *seed;
        cfg.seed_given = true;
    } else if (file_seed) {
        cfg.trials.seed = *file_seed;
        cfg.seed_given = true;
    } else if (const char* env = std::getenv(kSeedEnvVar); env && *env) {
        try {
            std::size_t used = 0;
            cfg.trials.seed = std::stoull(env, &used, 0);
            if (used != std::string_view(env).size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ConfigError(std::string("invalid ") + kSeedEnvVar + ": " + env);
        }
        cfg.seed_given = true;
    }

    auto pick = [](const std::optional<double>& flag, const std::optional<double>& file, double fallback) {
        return flag ? *flag : (file ? *file : fallback);
    };
    try {
        const auto d = CachingParams::defaults();
        cfg.params.gamma = pick(params.gamma, file_params.gamma, d.gamma);
        cfg.params.lambda = pick(params.lambda, file_params.lambda, d.lambda);
        cfg.params.range_m = pick(params.range_m, file_params.range_m, d.range_m);
        cfg.params.v_min_ms = kmh_to_ms(pick(params.vmin_kmh, file_params.vmin_kmh, 5.0));
        cfg.params.v_max_ms = kmh_to_ms(pick(params.vmax_kmh, file_params.vmax_kmh, 50.0));
        cfg.params.validate();
        cfg.grid = TauGrid::uniform(pick(tau.min, file_tau.min, 0.5), pick(tau.max, file_tau.max, 60.0),
                                    pick(tau.step, file_tau.step, 0.5));
        cfg.quadrature.validate();
        cfg.trials.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out)
{
    const Method method = parse_method(cfg.engine.value_or("quadrature"));
    if (method == Method::monte_carlo)
        throw ConfigError("analyze supports --engine quadrature or closed_form; use simulate for Monte Carlo");
    const auto models = selected_models(cfg);
    prepare_out_dir(cfg);

    int code = kExitOk;
    for (const auto& m : models) {
        const auto curve = outage_curve(m.model, cfg.params, cfg.grid, method, cfg.quadrature);
        const auto path = curve_path(cfg, m, "analysis");
        write_curve(path, curve, m);
        out << "wrote " << path.string() << '\n';
        if (!curve.all_converged())
            code = kExitNonConvergence;

        if (method == Method::quadrature && is_fully_random(m.model) && cfg.params.v_min_ms < cfg.params.v_max_ms) {
            const auto rows = literal_diagnostic(cfg.params, cfg.grid, cfg.quadrature);
            const auto lpath = curve_path(cfg, m, "literal_integral");
            auto os = open_output(lpath);
            write_literal_csv(os, rows);
            out << "wrote " << lpath.string() << '\n';
        }
    }
    return code;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out)
{
    if (ci_mode() && !cfg.seed_given)
        throw ConfigError(std::string("CI mode requires --seed or ") + kSeedEnvVar);
    const auto models = selected_models(cfg);
    prepare_out_dir(cfg);
    for (const auto& m : models) {
        const auto curve = mc_outage_curve(m.model, cfg.params, cfg.grid, cfg.trials);
        const auto path = curve_path(cfg, m, "simulation");
        write_curve(path, curve, m);
        out << "wrote " << path.string() << '\n';
    }
    return kExitOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out)
{
    if (!cfg.scenario || cfg.inline_model)
        throw ConfigError("compare needs --scenario");
    const Engine engine = parse_engine(cfg.engine.value_or("quadrature"));
    if (engine == Engine::monte_carlo && ci_mode() && !cfg.seed_given)
        throw ConfigError(std::string("CI mode requires --seed or ") + kSeedEnvVar);

    auto sc = builtin_scenario(*cfg.scenario);
    sc.params = cfg.params;
    sc.grid = cfg.grid;
    prepare_out_dir(cfg);

    EngineSettings settings{cfg.quadrature, cfg.trials};
    const auto report = run_comparison(sc, engine, settings);

    std::ostringstream summary;
    summary << "scenario " << sc.name << ": " << sc.description << '\n';
    summary << "headline pair: " << report.headline().random_label << " vs " << report.headline().vehicular_label
            << "\n\n";
    int code = kExitOk;
    for (const auto& rep : report.comparisons) {
        const std::string stem = sc.name + "_" + rep.random_label + "_vs_" + rep.vehicular_label;
        {
            auto os = open_output(cfg.out_dir / (stem + ".csv"));
            write_compare_csv(os, rep);
        }
        write_file(cfg.out_dir / (stem + ".svg"), render_svg(rep));
        summary << summarize(rep) << '\n';
        if (!rep.random_curve.all_converged() || !rep.vehicular_curve.all_converged())
            code = kExitNonConvergence;
    }
    write_file(cfg.out_dir / (sc.name + "_summary.txt"), summary.str());
    out << summary.str();
    return code;
}

int cmd_list_scenarios(std::ostream& out)
{
    for (const auto& name : builtin_scenario_names()) {
        const auto sc = builtin_scenario(name);
        out << sc.name << ": " << sc.description << '\n';
        for (std::size_t i = 0; i < sc.random_family.size(); ++i)
            out << "  random " << sc.random_family[i].label << (i == sc.headline ? " (headline)" : "") << ": "
                << sc.random_family[i].describe() << '\n';
        out << "  vehicular " << sc.vehicular.label << ": " << sc.vehicular.describe() << '\n';
    }
    return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        const auto cfg = parse_args(args);
        if (cfg.command == "analyze")
            return cmd_analyze(cfg, out);
        if (cfg.command == "simulate")
            return cmd_simulate(cfg, out);
        if (cfg.command == "compare")
            return cmd_compare(cfg, out);
        return cmd_list_scenarios(out);
    } catch (const NonConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

} // namespace vanet::cli

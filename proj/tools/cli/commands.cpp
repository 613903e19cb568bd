#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "standby/errors.hpp"
#include "standby/orders.hpp"

namespace standby::cli {

using nlohmann::json;

namespace {

struct Common {
    std::string config;
    std::string out;
    bool quiet = false;
};

struct Flags {
    Common common;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> points;
    std::optional<double> t_min;
    std::optional<double> t_max;
    std::optional<std::string> pm_time;
    std::optional<std::uint64_t> replications;
    std::optional<unsigned> threads;
    std::optional<std::string> mode;
    std::string dist;
};

void emit(const Common& common, const std::string& text, std::ostream& out, std::ostream& err) {
    if (common.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(common.out, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file " + common.out);
    file << text;
    if (!file) throw ConfigError("failed writing " + common.out);
    if (!common.quiet) err << "wrote " << common.out << '\n';
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ScenarioConfig require_config(const Common& common) {
    if (common.config.empty()) throw ConfigError("--config is required");
    return load_config(common.config);
}

int cmd_analyze(const Flags& f, std::ostream& out, std::ostream& err) {
    const auto cfg = require_config(f.common);
    const auto analysis = analyze(cfg.model, cfg.analysis);
    emit(f.common, dump(analysis_to_json(cfg.name, analysis)), out, err);
    return kExitOk;
}

int cmd_curve(const Flags& f, std::ostream& out, std::ostream& err) {
    const auto cfg = require_config(f.common);
    const double a = cfg.model.main_mean();
    const double t_min = f.t_min.value_or(cfg.curve.t_min.value_or(0.01 * a));
    const double t_max = f.t_max.value_or(cfg.curve.t_max.value_or(5.0 * a));
    const std::size_t points = f.points.value_or(cfg.curve.points);
    const auto rows = compute_curve(cfg.model, t_min, t_max, points);
    std::ostringstream csv;
    write_curve_csv(csv, rows);
    emit(f.common, csv.str(), out, err);
    return kExitOk;
}

int cmd_simulate(const Flags& f, std::ostream& out, std::ostream& err) {
    const auto cfg = require_config(f.common);
    const sim::PmTime pm_time = f.pm_time ? parse_pm_time(*f.pm_time) : cfg.simulation.pm_time;
    const std::uint64_t replications = f.replications.value_or(cfg.simulation.replications);
    if (replications < 2) throw DomainError("--replications: must be at least 2");
    const std::uint64_t seed = f.seed.value_or(cfg.simulation.seed);
    sim::EstimateOptions options;
    options.threads = f.threads.value_or(cfg.simulation.threads);

    const auto result = sim::estimate_mttf(cfg.model, pm_time, replications, seed, options);
    const double analytic =
        pm_time.finite() ? mttf(cfg.model, pm_time.value()) : mttf_no_pm(cfg.model);
    emit(f.common, dump(simulation_to_json(result, pm_time, analytic)), out, err);
    return kExitOk;
}

int cmd_compare(const Flags& f, std::ostream& out, std::ostream& err) {
    const auto cfg = require_config(f.common);
    if (!cfg.model2) throw ConfigError("compare: config has no \"model2\"");
    const CompareMode mode =
        f.mode ? parse_compare_mode(*f.mode) : cfg.comparison.mode.value_or(CompareMode::mttf);

    orders::ComparisonReport report;
    switch (mode) {
        case CompareMode::mttf: {
            const double a = cfg.model.main_mean();
            const auto grid = linear_grid(f.t_min.value_or(cfg.comparison.t_min.value_or(0.01 * a)),
                                          f.t_max.value_or(cfg.comparison.t_max.value_or(5.0 * a)),
                                          f.points.value_or(cfg.comparison.points));
            report = orders::compare_mttf(cfg.model, *cfg.model2, grid);
            break;
        }
        case CompareMode::thresholds:
            report = orders::compare_thresholds(cfg.model, *cfg.model2);
            break;
        case CompareMode::optimal:
            report = orders::compare_optimal_times(cfg.model, *cfg.model2);
            break;
    }
    json j = comparison_to_json(report);
    j["name"] = cfg.name;
    emit(f.common, dump(j), out, err);
    return kExitOk;
}

int cmd_classify(const Flags& f, std::ostream& out, std::ostream& err) {
    std::optional<Distribution> d;
    if (!f.dist.empty()) {
        json literal;
        try {
            literal = json::parse(f.dist);
        } catch (const json::parse_error& e) {
            throw ConfigError(std::string("--dist: ") + e.what());
        }
        d = parse_distribution(literal, "--dist");
    } else if (!f.common.config.empty()) {
        d = load_config(f.common.config).model.main();
    } else {
        throw ConfigError("classify: give --dist or --config");
    }
    ClassifyOptions options;
    if (f.points) options.grid_points = *f.points;
    const auto shape = classify_hazard_shape(*d, options);
    const auto origin = hazard_at_origin(*d);
    const auto limit = hazard_limit(*d);
    const auto limit_json = [](const HazardLimit& h) {
        return json{{"value", std::isfinite(h.value) ? json(h.value) : json("inf")},
                    {"numeric", h.numeric}};
    };
    json j{{"distribution", distribution_to_json(*d)},
           {"shape", shape_to_json(shape)},
           {"hazard_at_origin", limit_json(origin)},
           {"hazard_limit", limit_json(limit)},
           {"mean", mean(*d)}};
    emit(f.common, dump(j), out, err);
    return kExitOk;
}

void add_common(CLI::App* cmd, Common& common, bool config_required) {
    auto* opt = cmd->add_option("--config", common.config, "Scenario configuration (JSON)");
    if (config_required) opt->required();
    cmd->add_option("--out", common.out, "Write the report here instead of stdout");
    cmd->add_flag("--quiet", common.quiet, "Suppress informational messages");
}

}  // namespace

std::vector<double> linear_grid(double t_min, double t_max, std::size_t points) {
    if (!(t_min > 0.0) || !(t_max > t_min) || !std::isfinite(t_max)) {
        throw DomainError("grid: need 0 < t_min < t_max");
    }
    if (points < 2) throw DomainError("grid: need at least 2 points");
    std::vector<double> grid(points);
    const double step = (t_max - t_min) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) grid[i] = t_min + step * static_cast<double>(i);
    grid.back() = t_max;
    return grid;
}

std::vector<CurveRow> compute_curve(const SystemModel& model, double t_min, double t_max,
                                    std::size_t points) {
    const double m_inf = mttf_no_pm(model);
    const auto defined = [](auto&& fn) -> std::optional<double> {
        try {
            return fn();
        } catch (const BeyondSupport&) {
            return std::nullopt;
        }
    };
    std::vector<CurveRow> rows;
    for (double t : linear_grid(t_min, t_max, points)) {
        const double m = mttf(model, t);
        rows.push_back({t, m, m_inf, m - m_inf,
                        defined([&] { return mrl(model.main(), t); }),
                        defined([&] { return hazard(model.main(), t); }),
                        defined([&] { return phi(model, t); })});
    }
    return rows;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Preventive maintenance analysis for a two-unit priority standby system",
                 "standby-pm"};
    app.require_subcommand(1);
    Flags f;

    auto* analyze_cmd = app.add_subcommand("analyze", "Threshold, window and optimal PM times");
    add_common(analyze_cmd, f.common, true);

    auto* curve_cmd = app.add_subcommand("curve", "CSV of M(T), M(inf), MRL, hazard and phi");
    add_common(curve_cmd, f.common, true);
    curve_cmd->add_option("--tmin", f.t_min, "First grid time");
    curve_cmd->add_option("--tmax", f.t_max, "Last grid time");
    curve_cmd->add_option("--points", f.points, "Grid points (>= 2)");

    auto* simulate_cmd = app.add_subcommand("simulate", "Monte-Carlo estimate of M(T)");
    add_common(simulate_cmd, f.common, true);
    simulate_cmd->add_option("--T", f.pm_time, "Maintenance time or \"inf\"");
    simulate_cmd->add_option("--replications", f.replications, "Independent replications");
    simulate_cmd->add_option("--seed", f.seed, "Master seed");
    simulate_cmd->add_option("--threads", f.threads, "Worker threads (0 = all cores)");

    auto* compare_cmd = app.add_subcommand("compare", "Compare the two models of a config");
    add_common(compare_cmd, f.common, true);
    compare_cmd->add_option("--mode", f.mode, "mttf | thresholds | optimal");
    compare_cmd->add_option("--tmin", f.t_min, "First grid time (mttf mode)");
    compare_cmd->add_option("--tmax", f.t_max, "Last grid time (mttf mode)");
    compare_cmd->add_option("--points", f.points, "Grid points (mttf mode)");

    auto* classify_cmd = app.add_subcommand("classify", "Hazard shape of a distribution");
    add_common(classify_cmd, f.common, false);
    classify_cmd->add_option("--dist", f.dist, "Distribution literal (JSON)");
    classify_cmd->add_option("--points", f.points, "Classification grid points");

    const auto fail = [&](const std::string& kind, const std::string& message, int code) {
        err << error_to_json(kind, message).dump() << '\n';
        return code;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), kExitConfig);
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(f, out, err);
        if (curve_cmd->parsed()) return cmd_curve(f, out, err);
        if (simulate_cmd->parsed()) return cmd_simulate(f, out, err);
        if (compare_cmd->parsed()) return cmd_compare(f, out, err);
        if (classify_cmd->parsed()) return cmd_classify(f, out, err);
    } catch (const ConfigError& e) {
        return fail("config", e.what(), kExitConfig);
    } catch (const json::exception& e) {
        return fail("config", e.what(), kExitConfig);
    } catch (const DomainError& e) {
        return fail("domain", e.what(), kExitConfig);
    } catch (const PreconditionError& e) {
        return fail("precondition", e.what(), kExitConfig);
    } catch (const NumericError& e) {
        return fail("numeric", e.what(), kExitNumeric);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), kExitNumeric);
    }
    return fail("usage", "no command given", kExitConfig);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace standby::cli

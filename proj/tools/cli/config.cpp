#include "config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <vector>

namespace standby::cli {

using nlohmann::json;

namespace {

void expect_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
}

void reject_unknown(const json& j, const std::string& where,
                    std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) throw ConfigError(where + ": unknown key \"" + item.key() + "\"");
    }
}

const json& require(const json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError(where + ": missing key \"" + key + "\"");
    return *it;
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(where + ": expected a finite number");
    return v;
}

double positive(const json& j, const std::string& where) {
    const double v = number(j, where);
    if (!(v > 0.0)) throw ConfigError(where + ": expected a positive number");
    return v;
}

std::uint64_t unsigned_integer(const json& j, const std::string& where) {
    if (!j.is_number_unsigned()) throw ConfigError(where + ": expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

std::optional<double> optional_positive(const json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) return std::nullopt;
    return positive(*it, where + "." + key);
}

SystemModel parse_model(const json& j, const std::string& where) {
    expect_object(j, where);
    reject_unknown(j, where, {"main", "standby_rate", "repair", "maintenance"});
    return SystemModel(parse_distribution(require(j, "main", where), where + ".main"),
                       positive(require(j, "standby_rate", where), where + ".standby_rate"),
                       parse_distribution(require(j, "repair", where), where + ".repair"),
                       parse_distribution(require(j, "maintenance", where), where + ".maintenance"));
}

SolverOptions parse_analysis(const json& j) {
    const std::string where = "analysis";
    expect_object(j, where);
    reject_unknown(j, where,
                   {"horizon", "scan_points", "root_tolerance", "boundary_band",
                    "classify_horizon", "classify_points"});
    SolverOptions out;
    out.horizon = optional_positive(j, "horizon", where);
    if (j.contains("scan_points")) {
        out.scan_points = unsigned_integer(j["scan_points"], where + ".scan_points");
        if (out.scan_points < 2) throw ConfigError(where + ".scan_points: must be at least 2");
    }
    if (auto v = optional_positive(j, "root_tolerance", where)) out.root_tolerance = *v;
    if (auto v = optional_positive(j, "boundary_band", where)) out.boundary_band = *v;
    out.classify.horizon = optional_positive(j, "classify_horizon", where);
    if (j.contains("classify_points")) {
        out.classify.grid_points = unsigned_integer(j["classify_points"], where + ".classify_points");
        if (out.classify.grid_points < 3) {
            throw ConfigError(where + ".classify_points: must be at least 3");
        }
    }
    return out;
}

SimulationConfig parse_simulation(const json& j) {
    const std::string where = "simulation";
    expect_object(j, where);
    reject_unknown(j, where, {"replications", "seed", "T", "threads"});
    SimulationConfig out;
    if (j.contains("replications")) {
        out.replications = unsigned_integer(j["replications"], where + ".replications");
        if (out.replications < 2) throw ConfigError(where + ".replications: must be at least 2");
    }
    if (j.contains("seed")) out.seed = unsigned_integer(j["seed"], where + ".seed");
    if (j.contains("T")) out.pm_time = parse_pm_time(j["T"], where + ".T");
    if (j.contains("threads")) {
        out.threads = static_cast<unsigned>(unsigned_integer(j["threads"], where + ".threads"));
    }
    return out;
}

std::size_t grid_points(const json& j, const std::string& where) {
    const auto n = unsigned_integer(j, where);
    if (n < 2) throw ConfigError(where + ": must be at least 2");
    return n;
}

CurveConfig parse_curve(const json& j) {
    const std::string where = "curve";
    expect_object(j, where);
    reject_unknown(j, where, {"t_min", "t_max", "points"});
    CurveConfig out;
    out.t_min = optional_positive(j, "t_min", where);
    out.t_max = optional_positive(j, "t_max", where);
    if (j.contains("points")) out.points = grid_points(j["points"], where + ".points");
    return out;
}

ComparisonConfig parse_comparison(const json& j) {
    const std::string where = "comparison";
    expect_object(j, where);
    reject_unknown(j, where, {"mode", "t_min", "t_max", "points"});
    ComparisonConfig out;
    if (j.contains("mode")) {
        if (!j["mode"].is_string()) throw ConfigError(where + ".mode: expected a string");
        out.mode = parse_compare_mode(j["mode"].get<std::string>());
    }
    out.t_min = optional_positive(j, "t_min", where);
    out.t_max = optional_positive(j, "t_max", where);
    if (j.contains("points")) out.points = grid_points(j["points"], where + ".points");
    return out;
}

}  // namespace

Distribution parse_distribution(const json& j, const std::string& where) {
    expect_object(j, where);
    const json& kind_json = require(j, "kind", where);
    if (!kind_json.is_string()) throw ConfigError(where + ".kind: expected a string");
    const auto kind = kind_json.get<std::string>();
    if (kind == "exponential") {
        reject_unknown(j, where, {"kind", "rate"});
        return Distribution::exponential(positive(require(j, "rate", where), where + ".rate"));
    }
    if (kind == "weibull") {
        reject_unknown(j, where, {"kind", "scale", "shape"});
        return Distribution::weibull(positive(require(j, "scale", where), where + ".scale"),
                                     positive(require(j, "shape", where), where + ".shape"));
    }
    if (kind == "min_of" || kind == "max_of") {
        reject_unknown(j, where, {"kind", "components"});
        const json& list = require(j, "components", where);
        if (!list.is_array()) throw ConfigError(where + ".components: expected an array");
        if (list.size() < 2) throw ConfigError(where + ".components: needs at least 2 entries");
        std::vector<Distribution> parts;
        for (std::size_t i = 0; i < list.size(); ++i) {
            parts.push_back(
                parse_distribution(list[i], where + ".components[" + std::to_string(i) + "]"));
        }
        return kind == "min_of" ? Distribution::min_of(std::move(parts))
                                : Distribution::max_of(std::move(parts));
    }
    throw ConfigError(where + ".kind: unknown distribution kind \"" + kind + "\"");
}

json distribution_to_json(const Distribution& d) {
    switch (d.kind()) {
        case Distribution::Kind::exponential:
            return {{"kind", "exponential"}, {"rate", d.rate()}};
        case Distribution::Kind::weibull:
            return {{"kind", "weibull"}, {"scale", d.scale()}, {"shape", d.shape()}};
        case Distribution::Kind::min_of:
        case Distribution::Kind::max_of: {
            json parts = json::array();
            for (const auto& c : d.components()) parts.push_back(distribution_to_json(c));
            return {{"kind", d.kind() == Distribution::Kind::min_of ? "min_of" : "max_of"},
                    {"components", parts}};
        }
    }
    return nullptr;
}

sim::PmTime parse_pm_time(const json& j, const std::string& where) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "infinity") return sim::PmTime::never();
        throw ConfigError(where + ": expected a positive number or \"inf\"");
    }
    return sim::PmTime::at(positive(j, where));
}

sim::PmTime parse_pm_time(const std::string& text) {
    if (text == "inf" || text == "infinity") return sim::PmTime::never();
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !std::isfinite(value) || !(value > 0.0)) {
        throw ConfigError("--T: expected a positive number or \"inf\", got \"" + text + "\"");
    }
    return sim::PmTime::at(value);
}

CompareMode parse_compare_mode(const std::string& text) {
    if (text == "mttf") return CompareMode::mttf;
    if (text == "thresholds") return CompareMode::thresholds;
    if (text == "optimal") return CompareMode::optimal;
    throw ConfigError("comparison mode must be mttf, thresholds or optimal, got \"" + text + "\"");
}

std::string to_string(CompareMode mode) {
    switch (mode) {
        case CompareMode::mttf: return "mttf";
        case CompareMode::thresholds: return "thresholds";
        case CompareMode::optimal: return "optimal";
    }
    return "mttf";
}

ScenarioConfig parse_config(const json& j) {
    expect_object(j, "config");
    reject_unknown(j, "config",
                   {"schema", "name", "model", "model2", "analysis", "simulation", "curve",
                    "comparison"});
    const json& schema = require(j, "schema", "config");
    if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion) {
        throw ConfigError("config.schema: expected " + std::to_string(kSchemaVersion));
    }
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ConfigError("config.name: expected a string");
        name = j["name"].get<std::string>();
    }
    ScenarioConfig out{name, parse_model(require(j, "model", "config"), "model"), std::nullopt,
                       {}, {}, {}, {}};
    if (j.contains("model2")) out.model2 = parse_model(j["model2"], "model2");
    if (j.contains("analysis")) out.analysis = parse_analysis(j["analysis"]);
    if (j.contains("simulation")) out.simulation = parse_simulation(j["simulation"]);
    if (j.contains("curve")) out.curve = parse_curve(j["curve"]);
    if (j.contains("comparison")) out.comparison = parse_comparison(j["comparison"]);
    return out;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return parse_config(j);
}

}  // namespace standby::cli

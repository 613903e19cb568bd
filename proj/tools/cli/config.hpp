#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "standby/distribution.hpp"
#include "standby/simulate.hpp"
#include "standby/solvers.hpp"
#include "standby/system.hpp"

namespace standby::cli {

/// Malformed or schema-violating configuration. Maps to exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

struct SimulationConfig {
    std::uint64_t replications = 1'000'000;
    std::uint64_t seed = 1;
    sim::PmTime pm_time = sim::PmTime::never();
    unsigned threads = 0;
};

struct CurveConfig {
    std::optional<double> t_min;
    std::optional<double> t_max;
    std::size_t points = 500;
};

enum class CompareMode { mttf, thresholds, optimal };

struct ComparisonConfig {
    std::optional<CompareMode> mode;
    std::optional<double> t_min;
    std::optional<double> t_max;
    std::size_t points = 100;
};

struct ScenarioConfig {
    std::string name;
    SystemModel model;
    std::optional<SystemModel> model2;
    SolverOptions analysis;
    SimulationConfig simulation;
    CurveConfig curve;
    ComparisonConfig comparison;
};

Distribution parse_distribution(const nlohmann::json& j, const std::string& where = "distribution");
nlohmann::json distribution_to_json(const Distribution& d);

/// Accepts a positive number or the string "inf" (also "infinity").
sim::PmTime parse_pm_time(const nlohmann::json& j, const std::string& where);
sim::PmTime parse_pm_time(const std::string& text);

CompareMode parse_compare_mode(const std::string& text);
std::string to_string(CompareMode mode);

ScenarioConfig parse_config(const nlohmann::json& j);
/// Reads and validates a config file. Throws ConfigError on I/O, syntax or
/// schema errors and DomainError on invalid model parameters.
ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace standby::cli

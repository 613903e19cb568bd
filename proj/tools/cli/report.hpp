#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "standby/orders.hpp"
#include "standby/simulate.hpp"
#include "standby/solvers.hpp"

namespace standby::cli {

/// Shortest decimal with 12 significant digits; "nan", "inf", "-inf" for
/// nonfinite values. Independent of the global locale.
std::string format_decimal(double value);

nlohmann::json shape_to_json(const HazardShape& shape);
nlohmann::json analysis_to_json(const std::string& name, const PolicyAnalysis& analysis);
nlohmann::json simulation_to_json(const sim::SimulationResult& result, sim::PmTime pm_time,
                                  double analytic);
nlohmann::json comparison_to_json(const orders::ComparisonReport& report);
nlohmann::json error_to_json(const std::string& kind, const std::string& message);

/// One curve row; fields that are undefined at T (survival underflow) are
/// left empty.
struct CurveRow {
    double t;
    double mttf;
    double mttf_no_pm;
    double benefit;
    std::optional<double> mrl;
    std::optional<double> hazard;
    std::optional<double> phi;
};

inline constexpr const char* kCurveHeader = "T,mttf,mttf_no_pm,benefit,mrl,hazard,phi";

void write_curve_csv(std::ostream& out, std::span<const CurveRow> rows);

}  // namespace standby::cli

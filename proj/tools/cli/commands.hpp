#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace standby::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

std::vector<CurveRow> compute_curve(const SystemModel& model, double t_min, double t_max,
                                    std::size_t points);

/// Linear grid with both endpoints; requires 0 < t_min < t_max, points >= 2.
std::vector<double> linear_grid(double t_min, double t_max, std::size_t points);

/// Entry point of the standby-pm tool. Reports go to `out` unless --out is
/// given; diagnostics and error JSON go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace standby::cli

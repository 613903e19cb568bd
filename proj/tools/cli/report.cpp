#include "report.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace standby::cli {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) {
    if (!v || !std::isfinite(*v)) return nullptr;
    return *v;
}

json verdict_to_json(const orders::OrderVerdict& v) {
    json out{{"kind", orders::to_string(v.kind)},
             {"holds_on_grid", v.holds_on_grid},
             {"grid_points", v.grid.size()},
             {"tolerance", v.tolerance},
             {"first_violation", nullptr}};
    if (!v.grid.empty()) {
        out["grid_first"] = v.grid.front();
        out["grid_last"] = v.grid.back();
    }
    if (v.first_violation) {
        out["first_violation"] = {{"point", v.first_violation->point},
                                  {"lhs", v.first_violation->lhs},
                                  {"rhs", v.first_violation->rhs}};
    }
    return out;
}

}  // namespace

std::string format_decimal(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
    return std::string(buf.data(), res.ptr);
}

json shape_to_json(const HazardShape& shape) {
    return {{"kind", to_string(shape.kind)},
            {"change_point", optional_number(shape.change_point)},
            {"constant", shape.constant},
            {"horizon", shape.horizon},
            {"grid_start", shape.grid_start},
            {"grid_points", shape.grid_points},
            {"sign_changes", shape.sign_changes}};
}

json analysis_to_json(const std::string& name, const PolicyAnalysis& a) {
    return {{"name", name},
            {"a", a.a},
            {"mu1", a.mu1},
            {"mu2", a.mu2},
            {"delta_mu", a.delta_mu},
            {"K", a.k},
            {"shape", shape_to_json(a.shape)},
            {"mrl_extremum", optional_number(a.mrl_extremum)},
            {"t0", optional_number(a.t0)},
            {"t1", optional_number(a.t1)},
            {"t_star", optional_number(a.t_star)},
            {"mttf_at_t_star", optional_number(a.mttf_at_t_star)},
            {"mttf_no_pm", a.mttf_no_pm},
            {"status", to_string(a.status)}};
}

json simulation_to_json(const sim::SimulationResult& r, sim::PmTime pm_time, double analytic) {
    return {{"T", pm_time.finite() ? json(pm_time.value()) : json("inf")},
            {"estimate", r.estimate},
            {"std_error", r.std_error},
            {"replications", r.replications},
            {"seed", r.seed},
            {"mean_cycles", r.mean_cycles},
            {"analytic", analytic},
            {"z_score", r.std_error > 0.0 ? json((r.estimate - analytic) / r.std_error)
                                          : json(nullptr)}};
}

json comparison_to_json(const orders::ComparisonReport& report) {
    json hypotheses = json::array();
    for (const auto& h : report.hypotheses) {
        json item{{"name", h.name}, {"holds", h.holds}};
        if (h.lhs) item["lhs"] = optional_number(h.lhs);
        if (h.rhs) item["rhs"] = optional_number(h.rhs);
        if (h.verdict) item["verdict"] = verdict_to_json(*h.verdict);
        hypotheses.push_back(std::move(item));
    }
    json grid = json::array();
    for (const auto& row : report.grid) {
        grid.push_back({{"T", row.t}, {"first", row.first}, {"second", row.second}});
    }
    json observations = json::object();
    for (const auto& o : report.observations) observations[o.name] = optional_number(o.value);
    return {{"mode", report.mode},
            {"hypotheses", hypotheses},
            {"conclusion_checked", report.conclusion_checked},
            {"conclusion_holds", report.conclusion_holds},
            {"grid", grid},
            {"observations", observations}};
}

json error_to_json(const std::string& kind, const std::string& message) {
    return {{"error", kind}, {"message", message}};
}

void write_curve_csv(std::ostream& out, std::span<const CurveRow> rows) {
    const auto cell = [](const std::optional<double>& v) {
        return v ? format_decimal(*v) : std::string();
    };
    out << kCurveHeader << '\n';
    for (const auto& r : rows) {
        out << format_decimal(r.t) << ',' << format_decimal(r.mttf) << ','
            << format_decimal(r.mttf_no_pm) << ',' << format_decimal(r.benefit) << ','
            << cell(r.mrl) << ',' << cell(r.hazard) << ',' << cell(r.phi) << '\n';
    }
}

}  // namespace standby::cli

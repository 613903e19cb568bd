#include "standby/orders.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "standby/errors.hpp"
#include "standby/solvers.hpp"

namespace standby::orders {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_grid(std::span<const double> grid, const char* op) {
    if (grid.empty()) {
        throw DomainError(std::string(op) + ": grid must be nonempty");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw DomainError(std::string(op) + ": grid must be strictly increasing");
        }
    }
}

OrderVerdict pointwise(OrderKind kind, std::vector<double> grid, double tolerance,
                       bool relative, const std::function<double(double)>& lhs,
                       const std::function<double(double)>& rhs) {
    OrderVerdict out;
    out.kind = kind;
    out.tolerance = tolerance;
    for (double p : grid) {
        const double left = lhs(p);
        const double right = rhs(p);
        const double slack =
            relative ? tolerance * std::max(std::abs(left), std::abs(right)) : tolerance;
        if (left < right - slack) {
            out.holds_on_grid = false;
            out.first_violation = Violation{p, left, right};
            break;
        }
    }
    out.grid = std::move(grid);
    return out;
}

Hypothesis order_hypothesis(std::string name, OrderVerdict verdict) {
    Hypothesis h;
    h.name = std::move(name);
    h.holds = verdict.holds_on_grid;
    h.verdict = std::move(verdict);
    return h;
}

Hypothesis scalar_hypothesis(std::string name, bool holds, double lhs, double rhs) {
    Hypothesis h;
    h.name = std::move(name);
    h.holds = holds;
    h.lhs = lhs;
    h.rhs = rhs;
    return h;
}

// Standing assumption of every comparison: maintenance shortens the
// expected standby exposure in both systems.
void add_delta_mu_hypotheses(ComparisonReport& report, const SystemModel& first,
                             const SystemModel& second) {
    report.hypotheses.push_back(scalar_hypothesis("delta_mu_positive_first",
                                                  first.delta_mu() > 0.0, first.delta_mu(), 0.0));
    report.hypotheses.push_back(scalar_hypothesis(
        "delta_mu_positive_second", second.delta_mu() > 0.0, second.delta_mu(), 0.0));
}

Hypothesis structural_hypothesis(std::string name, const Distribution& a, const Distribution& b) {
    Hypothesis h;
    h.name = std::move(name);
    h.holds = a == b;
    return h;
}

bool all_hold(const std::vector<Hypothesis>& hs) {
    return std::all_of(hs.begin(), hs.end(), [](const Hypothesis& h) { return h.holds; });
}

void add_mu_observations(ComparisonReport& report, const SystemModel& first,
                         const SystemModel& second) {
    report.observations.push_back({"mu11", first.mu(Downtime::repair)});
    report.observations.push_back({"mu12", first.mu(Downtime::maintenance)});
    report.observations.push_back({"mu21", second.mu(Downtime::repair)});
    report.observations.push_back({"mu22", second.mu(Downtime::maintenance)});
}

bool bathtub_like(const HazardShape& shape) {
    return shape.kind == HazardKind::bfr || (shape.kind == HazardKind::ifr && !shape.constant);
}

}  // namespace

std::string to_string(OrderKind kind) {
    switch (kind) {
        case OrderKind::st: return "st";
        case OrderKind::lt: return "lt";
        case OrderKind::mrl: return "mrl";
    }
    return "st";
}

std::vector<double> default_time_grid(const Distribution& x, const Distribution& y,
                                      std::size_t points) {
    if (points < 2) throw DomainError("default_time_grid: need at least two points");
    const double horizon = std::max(survival_quantile(x, 1e-9), survival_quantile(y, 1e-9));
    const double start = 1e-6 * horizon;
    const double log_span = std::log(horizon / start);
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = i + 1 == points ? horizon
                                  : start * std::exp(log_span * static_cast<double>(i) /
                                                     static_cast<double>(points - 1));
    }
    return grid;
}

std::vector<double> default_transform_grid(std::size_t points) {
    if (points < 2) throw DomainError("default_transform_grid: need at least two points");
    std::vector<double> grid{0.0};
    for (std::size_t i = 0; i < points; ++i) {
        const double e = -3.0 + 6.0 * static_cast<double>(i) / static_cast<double>(points - 1);
        grid.push_back(std::pow(10.0, e));
    }
    return grid;
}

OrderVerdict check_st(const Distribution& x, const Distribution& y,
                      std::optional<std::vector<double>> grid, double tolerance) {
    auto points = grid ? std::move(*grid) : default_time_grid(x, y);
    require_grid(points, "check_st");
    return pointwise(OrderKind::st, std::move(points), tolerance, false,
                     [&](double t) { return survival(x, t); },
                     [&](double t) { return survival(y, t); });
}

OrderVerdict check_lt(const Distribution& x, const Distribution& y,
                      std::optional<std::vector<double>> s_grid, double tolerance) {
    auto points = s_grid ? std::move(*s_grid) : default_transform_grid();
    require_grid(points, "check_lt");
    if (points.front() < 0.0) throw DomainError("check_lt: transform arguments must be >= 0");
    return pointwise(OrderKind::lt, std::move(points), tolerance, true,
                     [&](double s) { return survival_laplace(x, s); },
                     [&](double s) { return survival_laplace(y, s); });
}

OrderVerdict check_mrl(const Distribution& x, const Distribution& y,
                       std::optional<std::vector<double>> grid, double tolerance) {
    auto points = grid ? std::move(*grid) : default_time_grid(x, y);
    require_grid(points, "check_mrl");
    return pointwise(OrderKind::mrl, std::move(points), tolerance, true,
                     [&](double t) { return mrl(x, t); }, [&](double t) { return mrl(y, t); });
}

double mttfr(const Distribution& d, double t) {
    const double failed = t > 0.0 ? cdf(d, t) : 0.0;
    if (!(failed > 0.0)) {
        std::ostringstream msg;
        msg << "mttfr: distribution function vanishes at t = " << t;
        throw DomainError(msg.str());
    }
    return integrated_survival(d, t) / failed;
}

ComparisonReport compare_mttf(const SystemModel& first, const SystemModel& second,
                              std::span<const double> t_grid) {
    require_grid(t_grid, "compare_mttf");
    if (!(t_grid.front() > 0.0)) throw DomainError("compare_mttf: T grid must be positive");

    ComparisonReport report;
    report.mode = "mttf";
    report.hypotheses.push_back(order_hypothesis("main_st", check_st(first.main(), second.main())));
    report.hypotheses.push_back(scalar_hypothesis("standby_rate_le",
                                                  first.standby_rate() <= second.standby_rate(),
                                                  first.standby_rate(), second.standby_rate()));
    report.hypotheses.push_back(
        order_hypothesis("repair_lt", check_lt(second.repair(), first.repair())));
    report.hypotheses.push_back(
        order_hypothesis("maintenance_lt", check_lt(second.maintenance(), first.maintenance())));
    add_delta_mu_hypotheses(report, first, second);

    bool ordered = true;
    for (double t : t_grid) {
        const double m1 = mttf(first, t);
        const double m2 = mttf(second, t);
        report.grid.push_back({t, m1, m2});
        ordered = ordered && m1 >= m2 - 1e-9;
    }
    report.conclusion_checked = all_hold(report.hypotheses);
    report.conclusion_holds = report.conclusion_checked && ordered;

    add_mu_observations(report, first, second);
    // mu1j <= mu2j alone already suffices when the main units and rates match.
    const bool weak = first.mu(Downtime::repair) <= second.mu(Downtime::repair) &&
                      first.mu(Downtime::maintenance) <= second.mu(Downtime::maintenance);
    report.observations.push_back({"mu_weakly_ordered", weak ? 1.0 : 0.0});
    report.observations.push_back({"grid_ordered", ordered ? 1.0 : 0.0});
    return report;
}

ComparisonReport compare_thresholds(const SystemModel& first, const SystemModel& second) {
    ComparisonReport report;
    report.mode = "thresholds";
    const double l1 = first.standby_rate();
    const double l2 = second.standby_rate();
    report.hypotheses.push_back(
        scalar_hypothesis("standby_rate_equal", std::abs(l1 - l2) <= 1e-12 * l1, l1, l2));
    report.hypotheses.push_back(
        structural_hypothesis("repair_identical", first.repair(), second.repair()));
    report.hypotheses.push_back(
        structural_hypothesis("maintenance_identical", first.maintenance(), second.maintenance()));
    add_delta_mu_hypotheses(report, first, second);
    const double a1 = first.main_mean();
    const double a2 = second.main_mean();
    report.hypotheses.push_back(
        scalar_hypothesis("main_mean_equal", std::abs(a1 - a2) <= 1e-8 * a1, a1, a2));
    report.hypotheses.push_back(
        order_hypothesis("main_mrl", check_mrl(first.main(), second.main())));

    report.conclusion_checked = all_hold(report.hypotheses);
    const auto r1 = threshold_time(first);
    const auto r2 = threshold_time(second);
    const double t10 = r1.t0.value_or(kInf);
    const double t20 = r2.t0.value_or(kInf);
    report.observations.push_back({"k1", threshold_constant(first)});
    report.observations.push_back({"k2", threshold_constant(second)});
    report.observations.push_back({"t0_first", t10});
    report.observations.push_back({"t0_second", t20});
    report.conclusion_holds = report.conclusion_checked && (t10 == kInf || t10 >= t20 - 1e-6);
    return report;
}

ComparisonReport compare_optimal_times(const SystemModel& first, const SystemModel& second) {
    ComparisonReport report;
    report.mode = "optimal";
    add_mu_observations(report, first, second);
    const double mu11 = first.mu(Downtime::repair);
    const double mu12 = first.mu(Downtime::maintenance);
    const double mu21 = second.mu(Downtime::repair);
    const double mu22 = second.mu(Downtime::maintenance);

    report.hypotheses.push_back(
        structural_hypothesis("main_identical", first.main(), second.main()));
    add_delta_mu_hypotheses(report, first, second);

    const HazardShape shape = classify_hazard_shape(first.main());
    const double k1 = threshold_constant(first);
    const double k2 = threshold_constant(second);
    report.observations.push_back({"k1", k1});
    report.observations.push_back({"k2", k2});
    const double bound = 1.0 / std::min(k1, k2);

    const auto& x = first.main();
    const double a = first.main_mean();
    if (bathtub_like(shape)) {
        const double limit = hazard_limit(x).value;
        report.hypotheses.push_back(
            scalar_hypothesis("existence_lim_hazard", limit > bound, limit, bound));
    } else if (shape.kind == HazardKind::ubfr) {
        const double r0 = hazard_at_origin(x).value;
        report.hypotheses.push_back(
            scalar_hypothesis("hazard_origin_le_inverse_mean", r0 <= 1.0 / a, r0, 1.0 / a));
        const auto c = r0 < 1.0 / a ? mrl_extremum(first, shape) : std::nullopt;
        const double r_c = c ? hazard(x, *c) : 0.0;
        report.hypotheses.push_back(
            scalar_hypothesis("existence_hazard_at_c", c && r_c > bound, r_c, bound));
    } else {
        Hypothesis h;
        h.name = "shape_bathtub_or_upside_down";
        h.holds = false;
        report.hypotheses.push_back(h);
    }

    const double product_lhs = mu21 * mu12;
    const double product_rhs = mu11 * mu22;
    const bool predicted = product_lhs >= product_rhs;
    report.observations.push_back({"product_mu21_mu12", product_lhs});
    report.observations.push_back({"product_mu11_mu22", product_rhs});
    report.observations.push_back({"predicts_first_ge_second", predicted ? 1.0 : 0.0});

    const bool chain = check_lt(first.maintenance(), second.maintenance()).holds_on_grid &&
                       check_lt(first.repair(), first.maintenance()).holds_on_grid &&
                       check_lt(second.repair(), first.repair()).holds_on_grid;
    report.observations.push_back({"lt_chain", chain ? 1.0 : 0.0});

    report.conclusion_checked = all_hold(report.hypotheses);
    if (!report.conclusion_checked) return report;

    const double t1 = optimal_time(first, shape);
    const double t2 = optimal_time(second, shape);
    report.observations.push_back({"t_star_first", t1});
    report.observations.push_back({"t_star_second", t2});
    const double tol = 1e-6 * a;
    report.conclusion_holds = predicted ? t1 >= t2 - tol : t1 <= t2 + tol;
    return report;
}

}  // namespace standby::orders

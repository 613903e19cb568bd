#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "standby/distribution.hpp"
#include "standby/system.hpp"

namespace standby::orders {

enum class OrderKind { st, lt, mrl };

std::string to_string(OrderKind kind);

struct Violation {
    double point;
    double lhs;  ///< value for the dominating candidate
    double rhs;  ///< value for the dominated candidate
};

/// Result of checking "x dominates y" on a finite grid. A passing verdict
/// means "holds on the grid", never a proof.
struct OrderVerdict {
    OrderKind kind = OrderKind::st;
    bool holds_on_grid = true;
    std::vector<double> grid;
    std::optional<Violation> first_violation;
    double tolerance = 0.0;
};

/// Log-spaced times from 1e-6 * H to H, where H is the later of the two
/// times at which survival drops to 1e-9.
std::vector<double> default_time_grid(const Distribution& x, const Distribution& y,
                                      std::size_t points = 512);
/// s = 0 followed by `points` log-spaced values in [1e-3, 1e3].
std::vector<double> default_transform_grid(std::size_t points = 64);

/// x >=st y: S_x(t) >= S_y(t) - tolerance at every grid time.
OrderVerdict check_st(const Distribution& x, const Distribution& y,
                      std::optional<std::vector<double>> grid = std::nullopt,
                      double tolerance = 1e-10);

/// x >=Lt y: Laplace transforms of the survivals ordered at every s, with
/// tolerance relative to the larger transform.
OrderVerdict check_lt(const Distribution& x, const Distribution& y,
                      std::optional<std::vector<double>> s_grid = std::nullopt,
                      double tolerance = 1e-9);

/// x >=mrl y: m_x(t) >= m_y(t) with tolerance relative to the larger MRL.
OrderVerdict check_mrl(const Distribution& x, const Distribution& y,
                       std::optional<std::vector<double>> grid = std::nullopt,
                       double tolerance = 1e-8);

/// Mean time to failure until replacement, g(t) = integral_0^t S / F(t).
double mttfr(const Distribution& d, double t);

/// A named hypothesis of a comparison theorem.
struct Hypothesis {
    std::string name;
    bool holds = false;
    std::optional<OrderVerdict> verdict;
    /// Scalar checks record the two compared values here.
    std::optional<double> lhs;
    std::optional<double> rhs;
};

/// Informational value reported alongside a comparison.
struct Observation {
    std::string name;
    double value;
};

struct GridRow {
    double t;
    double first;
    double second;
};

struct ComparisonReport {
    std::string mode;
    std::vector<Hypothesis> hypotheses;
    bool conclusion_checked = false;
    bool conclusion_holds = false;
    std::vector<GridRow> grid;
    std::vector<Observation> observations;
};

/// MTTF comparison: main1 >=st main2, lambda1 <= lambda2 and Y1j <=Lt Y2j
/// imply M1(T) >= M2(T). The M grid is always reported; the conclusion is
/// only checked when every hypothesis holds.
ComparisonReport compare_mttf(const SystemModel& first, const SystemModel& second,
                              std::span<const double> t_grid);

/// Threshold-time comparison: equal standby rates, identical downtime
/// distributions, equal main means and main1 >=mrl main2 imply T10 >= T20.
/// A missing threshold counts as +infinity.
ComparisonReport compare_thresholds(const SystemModel& first, const SystemModel& second);

/// Optimal-time comparison for identical BFR or UBFR main units:
/// T1* >= T2* if and only if mu21 * mu12 >= mu11 * mu22.
ComparisonReport compare_optimal_times(const SystemModel& first, const SystemModel& second);

}  // namespace standby::orders

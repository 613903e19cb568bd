#include "standby/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "standby/errors.hpp"
#include "standby/quadrature.hpp"

namespace standby {

namespace {

constexpr int kHorizonDoublings = 3;

double search_horizon(const SystemModel& model, const SolverOptions& options) {
    return options.horizon ? *options.horizon : survival_quantile(model.main(), 1e-12);
}

double root_tolerance(const SystemModel& model, const SolverOptions& options) {
    return options.root_tolerance * model.main_mean();
}

/// Leftmost point in [lo, hi] where the predicate f(x) < 0 differs from its
/// value at lo: a log-spaced pre-scan locates the first flip, then bisection
/// refines it. Points where the survival underflows end the scan.
std::optional<double> first_crossing(const std::function<double(double)>& f, double lo,
                                     double hi, std::size_t points, double tolerance) {
    points = std::max<std::size_t>(points, 2);
    const bool start_negative = f(lo) < 0.0;
    const double log_span = std::log(hi / lo);
    double previous = lo;
    for (std::size_t i = 1; i < points; ++i) {
        const double x = i + 1 == points
                             ? hi
                             : lo * std::exp(log_span * static_cast<double>(i) /
                                             static_cast<double>(points - 1));
        double value = 0.0;
        try {
            value = f(x);
        } catch (const BeyondSupport&) {
            return std::nullopt;
        }
        if ((value < 0.0) != start_negative) {
            return numeric::bisect(f, previous, x, tolerance);
        }
        previous = x;
    }
    return std::nullopt;
}

/// first_crossing over [lo, horizon], doubling the horizon up to three times
/// while the main unit's survival stays representable.
std::optional<double> crossing_with_doubling(const SystemModel& model,
                                             const std::function<double(double)>& f,
                                             double lo, double horizon,
                                             const SolverOptions& options) {
    const double tol = root_tolerance(model, options);
    double start = lo;
    double hi = horizon;
    for (int attempt = 0; attempt <= kHorizonDoublings; ++attempt) {
        if (hi > start) {
            if (auto root = first_crossing(f, start, hi, options.scan_points, tol)) return root;
            start = hi;
        }
        const double next = 2.0 * hi;
        if (survival(model.main(), next) == 0.0) break;
        hi = next;
    }
    return std::nullopt;
}

double grid_start(double horizon) { return 1e-9 * horizon; }

bool bathtub_like(const HazardShape& shape) {
    return shape.kind == HazardKind::bfr || (shape.kind == HazardKind::ifr && !shape.constant);
}

double lim_mrl(const Distribution& x) {
    const double lim_r = hazard_limit(x).value;
    if (lim_r == std::numeric_limits<double>::infinity()) return 0.0;
    if (lim_r <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / lim_r;
}

bool within_band(double value, double k, const SolverOptions& options) {
    return std::abs(value - k) < options.boundary_band * std::abs(k);
}

}  // namespace

std::string to_string(PolicyStatus status) {
    switch (status) {
        case PolicyStatus::found: return "found";
        case PolicyStatus::delta_mu_nonpositive: return "delta_mu_nonpositive";
        case PolicyStatus::never_beneficial: return "never_beneficial";
        case PolicyStatus::anti_aging: return "anti_aging";
        case PolicyStatus::unclassified_shape: return "unclassified_shape";
        case PolicyStatus::boundary_indeterminate: return "boundary_indeterminate";
    }
    return "unclassified_shape";
}

std::optional<double> mrl_extremum(const SystemModel& model, const HazardShape& shape,
                                   const SolverOptions& options) {
    const auto& x = model.main();
    const double a = model.main_mean();
    const double r0 = hazard_at_origin(x).value;
    const double horizon = search_horizon(model, options);
    const auto stationarity = [&](double t) { return mrl(x, t) * hazard(x, t) - 1.0; };

    if (bathtub_like(shape)) {
        // IFR is DMRL: no interior maximiser.
        if (shape.kind == HazardKind::ifr || r0 <= 1.0 / a) return std::nullopt;
        const double t_min = shape.change_point.value_or(0.0);
        auto c = first_crossing(stationarity, grid_start(horizon), t_min, options.scan_points,
                                root_tolerance(model, options));
        if (!c) throw NumericError("mrl_extremum: no stationary point below t_min");
        return c;
    }
    if (shape.kind == HazardKind::ubfr) {
        if (r0 >= 1.0 / a) return std::nullopt;
        const double t_max = shape.change_point.value_or(horizon);
        auto c = first_crossing(stationarity, grid_start(horizon), t_max, options.scan_points,
                                root_tolerance(model, options));
        if (!c) throw NumericError("mrl_extremum: no stationary point below t_max");
        return c;
    }
    std::ostringstream msg;
    msg << "mrl_extremum: hazard shape " << to_string(shape.kind)
        << (shape.constant ? " (constant)" : "") << " is neither bathtub nor upside-down bathtub";
    throw PreconditionError(msg.str());
}

ThresholdResult threshold_time(const SystemModel& model, const HazardShape& shape,
                               const SolverOptions& options) {
    ThresholdResult out;
    const auto& x = model.main();
    const double k = threshold_constant(model);
    const double horizon = search_horizon(model, options);
    const auto gap = [&](double t) { return mrl(x, t) - k; };

    if (!(model.delta_mu() > 0.0)) {
        out.status = PolicyStatus::delta_mu_nonpositive;
        return out;
    }
    if (shape.kind == HazardKind::unclassified) {
        out.status = PolicyStatus::unclassified_shape;
        return out;
    }
    if (shape.kind == HazardKind::dfr || shape.constant) {
        out.status = PolicyStatus::anti_aging;
        return out;
    }

    if (bathtub_like(shape)) {
        out.mrl_extremum = mrl_extremum(model, shape, options);
        const double limit = lim_mrl(x);
        if (within_band(limit, k, options)) {
            out.status = PolicyStatus::boundary_indeterminate;
            return out;
        }
        if (limit >= k) {
            out.status = PolicyStatus::never_beneficial;
            return out;
        }
        const double lo = out.mrl_extremum.value_or(grid_start(horizon));
        out.t0 = crossing_with_doubling(model, gap, lo, horizon, options);
        if (!out.t0) throw NumericError("threshold_time: no_crossing of m(T) = K");
        out.status = PolicyStatus::found;
        return out;
    }

    // UBFR
    out.mrl_extremum = mrl_extremum(model, shape, options);
    if (!out.mrl_extremum) {
        out.status = PolicyStatus::anti_aging;
        return out;
    }
    const double c = *out.mrl_extremum;
    const double m_c = mrl(x, c);
    if (within_band(m_c, k, options)) {
        out.status = PolicyStatus::boundary_indeterminate;
        return out;
    }
    if (m_c >= k) {
        out.status = PolicyStatus::never_beneficial;
        return out;
    }
    out.t0 = first_crossing(gap, grid_start(horizon), c, options.scan_points,
                            root_tolerance(model, options));
    if (!out.t0) throw NumericError("threshold_time: no_crossing of m(T) = K below c");
    out.status = PolicyStatus::found;
    return out;
}

ThresholdResult threshold_time(const SystemModel& model, const SolverOptions& options) {
    return threshold_time(model, classify_hazard_shape(model.main(), options.classify), options);
}

namespace {

std::optional<double> window_end(const SystemModel& model, const HazardShape& shape,
                                 const ThresholdResult& threshold, const SolverOptions& options) {
    if (shape.kind != HazardKind::ubfr) {
        throw PreconditionError("benefit_window_end: requires an upside-down bathtub hazard");
    }
    if (!threshold.t0 || !threshold.mrl_extremum) {
        throw PreconditionError("benefit_window_end: threshold time does not exist");
    }
    const auto& x = model.main();
    const double k = threshold_constant(model);
    const double limit = lim_mrl(x);
    if (limit < k) return std::nullopt;

    const auto gap = [&](double t) { return mrl(x, t) - k; };
    auto t1 = crossing_with_doubling(model, gap, *threshold.mrl_extremum,
                                     search_horizon(model, options), options);
    if (!t1 && !within_band(limit, k, options)) {
        throw NumericError("benefit_window_end: no_crossing of m(T) = K above c");
    }
    return t1;
}

double optimum(const SystemModel& model, const HazardShape& shape,
               const ThresholdResult& threshold, const SolverOptions& options) {
    if (!threshold.t0) throw PreconditionError("optimal_time: threshold time does not exist");
    const double target = model.mu(Downtime::repair) / model.delta_mu();
    const double horizon = search_horizon(model, options);
    const auto gap = [&](double t) { return phi(model, t) - target; };

    std::optional<double> root;
    if (bathtub_like(shape)) {
        const double lo = std::max(shape.change_point.value_or(0.0), grid_start(horizon));
        root = crossing_with_doubling(model, gap, lo, horizon, options);
    } else if (shape.kind == HazardKind::ubfr && threshold.mrl_extremum) {
        root = first_crossing(gap, grid_start(horizon), *threshold.mrl_extremum,
                              options.scan_points, root_tolerance(model, options));
    } else {
        throw PreconditionError("optimal_time: unsupported hazard shape");
    }
    if (!root) throw NumericError("optimal_time: no_crossing of phi(T) = mu1/delta_mu");
    if (*root < *threshold.t0 - root_tolerance(model, options)) {
        std::ostringstream msg;
        msg << "optimal_time: T* = " << *root << " precedes T0 = " << *threshold.t0;
        throw NumericError(msg.str());
    }
    return *root;
}

}  // namespace

std::optional<double> benefit_window_end(const SystemModel& model, const HazardShape& shape,
                                         const SolverOptions& options) {
    if (shape.kind != HazardKind::ubfr) {
        throw PreconditionError("benefit_window_end: requires an upside-down bathtub hazard");
    }
    return window_end(model, shape, threshold_time(model, shape, options), options);
}

std::optional<double> benefit_window_end(const SystemModel& model,
                                         const SolverOptions& options) {
    return benefit_window_end(model, classify_hazard_shape(model.main(), options.classify),
                              options);
}

double optimal_time(const SystemModel& model, const HazardShape& shape,
                    const SolverOptions& options) {
    return optimum(model, shape, threshold_time(model, shape, options), options);
}

double optimal_time(const SystemModel& model, const SolverOptions& options) {
    return optimal_time(model, classify_hazard_shape(model.main(), options.classify), options);
}

PolicyAnalysis analyze(const SystemModel& model, const SolverOptions& options) {
    PolicyAnalysis out;
    out.a = model.main_mean();
    out.mu1 = model.mu(Downtime::repair);
    out.mu2 = model.mu(Downtime::maintenance);
    out.delta_mu = model.delta_mu();
    out.k = threshold_constant(model);
    out.mttf_no_pm = mttf_no_pm(model);
    out.shape = classify_hazard_shape(model.main(), options.classify);

    const auto threshold = threshold_time(model, out.shape, options);
    out.status = threshold.status;
    out.t0 = threshold.t0;
    out.mrl_extremum = threshold.mrl_extremum;
    if (threshold.status != PolicyStatus::found) return out;

    if (out.shape.kind == HazardKind::ubfr) out.t1 = window_end(model, out.shape, threshold, options);
    out.t_star = optimum(model, out.shape, threshold, options);
    out.mttf_at_t_star = mttf(model, *out.t_star);
    return out;
}

}  // namespace standby

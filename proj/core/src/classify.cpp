#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "standby/distribution.hpp"
#include "standby/errors.hpp"
#include "standby/quadrature.hpp"

namespace standby {

namespace {

// Increments smaller than this fraction of the hazard are rounding noise.
constexpr double kFlatRelative = 1e-12;
constexpr double kDifferenceStep = 1e-6;

int slope_sign(double left, double right) {
    const double diff = right - left;
    const double scale = std::max(std::abs(left), std::abs(right));
    if (std::abs(diff) <= kFlatRelative * scale) return 0;
    return diff > 0.0 ? 1 : -1;
}

double refine_change_point(const Distribution& d, double lo, double hi, double tolerance,
                           double fallback) {
    const auto slope = [&](double t) {
        return hazard(d, t * (1.0 + kDifferenceStep)) - hazard(d, t * (1.0 - kDifferenceStep));
    };
    try {
        return numeric::bisect(slope, lo, hi, tolerance);
    } catch (const NumericError&) {
        return fallback;
    }
}

}  // namespace

HazardShape classify_hazard_shape(const Distribution& d, ClassifyOptions options) {
    const double horizon = options.horizon ? *options.horizon : survival_quantile(d, 1e-9);
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw DomainError("classify_hazard_shape: horizon must be positive and finite");
    }
    if (options.grid_points < 3) {
        throw DomainError("classify_hazard_shape: grid needs at least three points");
    }

    const std::size_t n = options.grid_points;
    const double start = 1e-9 * horizon;
    const double log_span = std::log(horizon / start);

    std::vector<double> grid(n);
    std::vector<double> rates(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = i + 1 == n ? horizon
                             : start * std::exp(log_span * static_cast<double>(i) /
                                                static_cast<double>(n - 1));
        rates[i] = hazard(d, grid[i]);
    }

    HazardShape shape;
    shape.horizon = horizon;
    shape.grid_start = start;
    shape.grid_points = n;

    int current = 0;
    std::size_t last_old = 0;   // last step carrying the sign before the change
    std::size_t first_new = 0;  // first step carrying the sign after the change
    std::size_t last_nonzero = 0;
    int first_sign = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const int s = slope_sign(rates[i], rates[i + 1]);
        if (s == 0) continue;
        if (current == 0) {
            first_sign = s;
        } else if (s != current) {
            if (++shape.sign_changes == 1) {
                last_old = last_nonzero;
                first_new = i;
            }
        }
        current = s;
        last_nonzero = i;
    }

    if (first_sign == 0) {
        shape.kind = HazardKind::ifr;
        shape.constant = true;
        return shape;
    }
    if (shape.sign_changes == 0) {
        shape.kind = first_sign > 0 ? HazardKind::ifr : HazardKind::dfr;
        return shape;
    }
    if (shape.sign_changes > 1) {
        shape.kind = HazardKind::unclassified;
        return shape;
    }

    shape.kind = first_sign < 0 ? HazardKind::bfr : HazardKind::ubfr;
    const double lo = grid[last_old];
    const double hi = grid[std::min(first_new + 1, n - 1)];
    // Extreme sampled value within the bracket, used if bisection is defeated by noise.
    std::size_t best = last_old;
    for (std::size_t i = last_old; i <= std::min(first_new + 1, n - 1); ++i) {
        const bool better = shape.kind == HazardKind::bfr ? rates[i] < rates[best]
                                                           : rates[i] > rates[best];
        if (better) best = i;
    }
    shape.change_point = refine_change_point(d, lo, hi, 1e-9 * horizon, grid[best]);
    return shape;
}

}  // namespace standby

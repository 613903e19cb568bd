#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace standby {

/**
 * Lifetime of a nonnegative random variable, built compositionally from
 * exponential and Weibull leaves combined by independent minimum (series)
 * and maximum (parallel) nodes.
 *
 * Values are immutable and cheap to copy; children are shared.
 * Weibull is parameterised as S(t) = exp(-(t/scale)^shape).
 */
class Distribution {
public:
    enum class Kind { exponential, weibull, min_of, max_of };

    static Distribution exponential(double rate);
    static Distribution weibull(double scale, double shape);
    static Distribution min_of(std::vector<Distribution> components);
    static Distribution max_of(std::vector<Distribution> components);

    Kind kind() const noexcept;

    /// Exponential rate. Throws PreconditionError for other kinds.
    double rate() const;
    /// Weibull scale. Throws PreconditionError for other kinds.
    double scale() const;
    /// Weibull shape. Throws PreconditionError for other kinds.
    double shape() const;
    /// Components of a min_of/max_of node; empty for leaves.
    std::span<const Distribution> components() const noexcept;

    /// Structural equality on the composition tree (same kinds, same
    /// parameters, same component order). Used for "identically
    /// distributed" hypotheses.
    friend bool operator==(const Distribution& lhs, const Distribution& rhs);

private:
    struct Node;
    explicit Distribution(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Compact human-readable form, e.g. "min_of[weibull(1,0.5), weibull(1,3)]".
std::string to_string(const Distribution& d);

double log_survival(const Distribution& d, double t);
double survival(const Distribution& d, double t);
/// F(t) = 1 - S(t), computed without cancellation for small t.
double cdf(const Distribution& d, double t);
double density(const Distribution& d, double t);
double hazard(const Distribution& d, double t);

double mean(const Distribution& d);
/// Integral of the survival function over [0, t].
double integrated_survival(const Distribution& d, double t);
/// Mean residual life m(t) = (1/S(t)) * integral_t^inf S(x) dx.
double mrl(const Distribution& d, double t);
/// m'(t) through the identity m'(t) = m(t) r(t) - 1.
double mrl_slope(const Distribution& d, double t);
/// Laplace transform of the survival function, integral_0^inf e^{-s t} S(t) dt.
double survival_laplace(const Distribution& d, double s);

/// Smallest t with S(t) <= level, located by doubling then bisection on the
/// log survival (relative accuracy 1e-12).
double survival_quantile(const Distribution& d, double level);

struct HazardLimit {
    double value;  ///< may be +infinity
    bool numeric;  ///< true when estimated by evaluation instead of derived
};

/// lim_{t->inf} r(t).
HazardLimit hazard_limit(const Distribution& d);
/// lim_{t->0+} r(t).
HazardLimit hazard_at_origin(const Distribution& d);

enum class HazardKind { ifr, dfr, bfr, ubfr, unclassified };

std::string to_string(HazardKind kind);

/// Verdict of classify_hazard_shape together with the scan diagnostics.
struct HazardShape {
    HazardKind kind = HazardKind::unclassified;
    /// t_min for BFR, t_max for UBFR.
    std::optional<double> change_point;
    double horizon = 0.0;
    double grid_start = 0.0;
    std::size_t grid_points = 0;
    int sign_changes = 0;
    /// No grid step changed the hazard beyond rounding (exponential).
    bool constant = false;
};

struct ClassifyOptions {
    /// Defaults to the time where survival drops to 1e-9.
    std::optional<double> horizon;
    std::size_t grid_points = 4096;
};

/**
 * Scans the sign of hazard increments on a log-spaced grid over
 * [1e-9 * horizon, horizon]. No sign change gives IFR (nondecreasing,
 * including constant) or DFR; a single decrease-to-increase change gives
 * BFR and a single increase-to-decrease change gives UBFR, with the change
 * point refined by bisection on the sign of a central difference. Anything
 * else is Unclassified.
 */
HazardShape classify_hazard_shape(const Distribution& d, ClassifyOptions options = {});

}  // namespace standby

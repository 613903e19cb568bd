#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "standby/distribution.hpp"
#include "standby/system.hpp"

namespace standby {

/// Outcome of the threshold search; also the status of a full analysis.
enum class PolicyStatus {
    found,
    delta_mu_nonpositive,
    never_beneficial,
    anti_aging,
    unclassified_shape,
    boundary_indeterminate,
};

std::string to_string(PolicyStatus status);

struct SolverOptions {
    /// Search horizon; defaults to the time where the main unit's survival
    /// is 1e-12. Doubled up to three times when no crossing is found.
    std::optional<double> horizon;
    /// Points of the pre-scan that locates the leftmost sign change.
    std::size_t scan_points = 4096;
    /// Bisection stops at this fraction of the main unit's mean.
    double root_tolerance = 1e-9;
    /// |lim m - K| (or |m(c) - K|) below this fraction of K is a tie.
    double boundary_band = 1e-6;
    ClassifyOptions classify;
};

/// Result of the threshold-time search.
struct ThresholdResult {
    std::optional<double> t0;
    PolicyStatus status = PolicyStatus::unclassified_shape;
    /// Stationary point of the MRL used to bracket the search, if any.
    std::optional<double> mrl_extremum;
};

struct PolicyAnalysis {
    double a = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double delta_mu = 0.0;
    double k = 0.0;
    double mttf_no_pm = 0.0;
    HazardShape shape;
    std::optional<double> mrl_extremum;
    std::optional<double> t0;
    std::optional<double> t1;
    std::optional<double> t_star;
    std::optional<double> mttf_at_t_star;
    PolicyStatus status = PolicyStatus::unclassified_shape;
};

/// Maximiser (BFR) or minimiser (UBFR) c of the main unit's MRL, as the root
/// of m(t) r(t) - 1 below the hazard change point. Empty when the MRL is
/// monotone (r(0+) <= 1/a for BFR, r(0+) >= 1/a for UBFR). IFR hazards count
/// as BFR with change point 0. Throws PreconditionError for DFR, constant,
/// or unclassified hazards.
std::optional<double> mrl_extremum(const SystemModel& model, const HazardShape& shape,
                                   const SolverOptions& options = {});

/// T0 = inf{T > 0 : m(T) < K} following the BFR/UBFR case analysis.
ThresholdResult threshold_time(const SystemModel& model, const HazardShape& shape,
                               const SolverOptions& options = {});
ThresholdResult threshold_time(const SystemModel& model, const SolverOptions& options = {});

/// T1 = inf{T > c : m(T) = K} for a UBFR main unit whose MRL tail limit is
/// at least K. Empty when the tail limit is below K (benefit for every
/// T > T0). Throws PreconditionError for non-UBFR shapes or when T0 does
/// not exist.
std::optional<double> benefit_window_end(const SystemModel& model, const HazardShape& shape,
                                         const SolverOptions& options = {});
std::optional<double> benefit_window_end(const SystemModel& model,
                                         const SolverOptions& options = {});

/// Optimal maintenance time: first root of phi(T) = mu1/delta_mu on the
/// increasing branch of phi (from max(T0, t_min) for BFR, on (T0, c) for
/// UBFR). Throws PreconditionError when no threshold exists and
/// NumericError("no_crossing") when the root cannot be bracketed.
double optimal_time(const SystemModel& model, const HazardShape& shape,
                    const SolverOptions& options = {});
double optimal_time(const SystemModel& model, const SolverOptions& options = {});

/// Runs the full case analysis. Unfavourable outcomes are reported through
/// `status`; only numeric failures throw.
PolicyAnalysis analyze(const SystemModel& model, const SolverOptions& options = {});

}  // namespace standby

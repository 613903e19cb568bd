#pragma once

#include "standby/distribution.hpp"

namespace standby {

/// Which downtime activity overlaps with the standby unit's operation.
enum class Downtime { repair, maintenance };

/**
 * Two-unit priority standby system with one repair facility.
 *
 * The main unit (lifetime `main`) runs whenever it is available. The
 * standby unit is cold while waiting and, while covering, fails at the
 * exponential rate `standby_rate`. A failure of the main unit triggers a
 * repair (`repair`); reaching age T without failure triggers preventive
 * maintenance (`maintenance`). The system fails when the standby unit dies
 * before the repair or maintenance in progress completes.
 *
 * Derived constants (mean of the main unit, mu for both downtimes) are
 * computed once at construction; the object is immutable afterwards.
 */
class SystemModel {
public:
    SystemModel(Distribution main, double standby_rate, Distribution repair,
                Distribution maintenance);

    const Distribution& main() const noexcept { return main_; }
    double standby_rate() const noexcept { return standby_rate_; }
    const Distribution& repair() const noexcept { return repair_; }
    const Distribution& maintenance() const noexcept { return maintenance_; }
    const Distribution& downtime(Downtime which) const noexcept {
        return which == Downtime::repair ? repair_ : maintenance_;
    }

    /// a = E[X1].
    double main_mean() const noexcept { return main_mean_; }
    /// mu_j = E[min(X2, Y_j)].
    double mu(Downtime which) const noexcept {
        return which == Downtime::repair ? mu_repair_ : mu_maintenance_;
    }
    double delta_mu() const noexcept { return mu_repair_ - mu_maintenance_; }

private:
    Distribution main_;
    double standby_rate_;
    Distribution repair_;
    Distribution maintenance_;
    double main_mean_;
    double mu_repair_;
    double mu_maintenance_;
};

/// E[min(X2, Y)] for X2 ~ Exp(standby_rate): the Laplace transform of the
/// survival of Y evaluated at the standby rate.
double standby_overlap_mean(double standby_rate, const Distribution& downtime);

double mu(const SystemModel& model, Downtime which);

/// p(T) = lambda * (mu1 F(T) + mu2 S(T)), probability that a cycle ends in
/// system failure.
double cycle_failure_prob(const SystemModel& model, double pm_time);

/// Mean time to system failure with maintenance after `pm_time` units of
/// continuous operation:
///   M(T) = (1/lambda) (1 + integral_0^T S / (mu1 F(T) + mu2 S(T))).
double mttf(const SystemModel& model, double pm_time);

/// M(inf) = (1/lambda) (1 + a / mu1).
double mttf_no_pm(const SystemModel& model);

/// K = a * delta_mu / mu1.
double threshold_constant(const SystemModel& model);

struct Benefit {
    double difference;  ///< M(T) - M(inf)
    bool predicate;     ///< m(T) < K
};

Benefit benefit(const SystemModel& model, double pm_time);

/// phi(t) = r(t) * integral_0^t S + S(t) for the main unit. M'(T) has the
/// sign of mu1/delta_mu - phi(T).
double phi(const SystemModel& model, double t);

}  // namespace standby

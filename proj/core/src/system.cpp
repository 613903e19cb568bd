#include "standby/system.hpp"

#include <cmath>
#include <sstream>

#include "standby/errors.hpp"

namespace standby {

namespace {

void require_pm_time(double t, const char* op) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        std::ostringstream msg;
        msg << op << ": maintenance time must be positive and finite, got " << t;
        throw DomainError(msg.str());
    }
}

}  // namespace

SystemModel::SystemModel(Distribution main, double standby_rate, Distribution repair,
                         Distribution maintenance)
    : main_(std::move(main)),
      standby_rate_(standby_rate),
      repair_(std::move(repair)),
      maintenance_(std::move(maintenance)) {
    if (!(standby_rate_ > 0.0) || !std::isfinite(standby_rate_)) {
        std::ostringstream msg;
        msg << "SystemModel: standby rate must be positive and finite, got " << standby_rate_;
        throw DomainError(msg.str());
    }
    main_mean_ = mean(main_);
    mu_repair_ = standby_overlap_mean(standby_rate_, repair_);
    mu_maintenance_ = standby_overlap_mean(standby_rate_, maintenance_);
}

double standby_overlap_mean(double standby_rate, const Distribution& downtime) {
    if (!(standby_rate > 0.0) || !std::isfinite(standby_rate)) {
        throw DomainError("standby_overlap_mean: standby rate must be positive and finite");
    }
    if (downtime.kind() == Distribution::Kind::exponential) {
        return 1.0 / (standby_rate + downtime.rate());
    }
    return survival_laplace(downtime, standby_rate);
}

double mu(const SystemModel& model, Downtime which) { return model.mu(which); }

double cycle_failure_prob(const SystemModel& model, double pm_time) {
    require_pm_time(pm_time, "cycle_failure_prob");
    const double log_s = log_survival(model.main(), pm_time);
    const double s = std::exp(log_s);
    const double f = -std::expm1(log_s);
    return model.standby_rate() *
           (model.mu(Downtime::repair) * f + model.mu(Downtime::maintenance) * s);
}

double mttf(const SystemModel& model, double pm_time) {
    require_pm_time(pm_time, "mttf");
    const double log_s = log_survival(model.main(), pm_time);
    const double s = std::exp(log_s);
    const double f = -std::expm1(log_s);
    const double denom =
        model.mu(Downtime::repair) * f + model.mu(Downtime::maintenance) * s;
    const double uptime = integrated_survival(model.main(), pm_time);
    return (1.0 + uptime / denom) / model.standby_rate();
}

double mttf_no_pm(const SystemModel& model) {
    return (1.0 + model.main_mean() / model.mu(Downtime::repair)) / model.standby_rate();
}

double threshold_constant(const SystemModel& model) {
    return model.main_mean() * model.delta_mu() / model.mu(Downtime::repair);
}

Benefit benefit(const SystemModel& model, double pm_time) {
    require_pm_time(pm_time, "benefit");
    return {mttf(model, pm_time) - mttf_no_pm(model),
            mrl(model.main(), pm_time) < threshold_constant(model)};
}

double phi(const SystemModel& model, double t) {
    require_pm_time(t, "phi");
    const auto& x = model.main();
    return hazard(x, t) * integrated_survival(x, t) + survival(x, t);
}

}  // namespace standby

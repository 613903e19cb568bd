#pragma once

#include <cstdint>
#include <random>

#include "standby/distribution.hpp"
#include "standby/system.hpp"

namespace standby::sim {

/// Maintenance interval for simulation: a positive time or "never".
class PmTime {
public:
    static PmTime at(double t);
    static PmTime never() noexcept { return PmTime(); }

    bool finite() const noexcept { return finite_; }
    /// Only meaningful when finite().
    double value() const noexcept { return value_; }

private:
    PmTime() = default;
    double value_ = 0.0;
    bool finite_ = false;
};

using Rng = std::mt19937_64;

/// Uniform variate in (0, 1], built from the top 53 bits of one draw.
double uniform_open_closed(Rng& rng);

/// Inverse-transform sampling for leaves; min_of / max_of sample every
/// component (in order) and take the min / max.
double sample_lifetime(const Distribution& d, Rng& rng);

/// One cycle's random inputs. Only the downtime that applies is read: repair
/// if the main unit fails no later than T, maintenance otherwise.
struct CycleDraws {
    double main;
    double standby;
    double repair;
    double maintenance;
};

struct CycleOutcome {
    double duration;
    bool system_failed;
};

/// Duration of a cycle: min(X1, T) + min(X2, Y). The system fails when the
/// standby dies strictly before the downtime ends; ties favour survival.
CycleOutcome run_cycle(const CycleDraws& draws, PmTime pm_time);

struct TauSample {
    double time;
    std::uint64_t cycles;
};

/// Runs cycles until system failure with draws supplied by `draw()`.
template <class DrawCycle>
TauSample simulate_tau(PmTime pm_time, DrawCycle&& draw) {
    TauSample out{0.0, 0};
    while (true) {
        const CycleOutcome cycle = run_cycle(draw(), pm_time);
        out.time += cycle.duration;
        ++out.cycles;
        if (cycle.system_failed) return out;
    }
}

/// Simulates tau(T) for `model` using `rng`. Draw order per cycle: main
/// lifetime, standby lifetime, then the applicable downtime.
TauSample simulate_tau(const SystemModel& model, PmTime pm_time, Rng& rng);

struct SimulationResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t replications = 0;
    std::uint64_t seed = 0;
    double mean_cycles = 0.0;
    double cycles_std_error = 0.0;
    /// Total simulated time divided by total cycles.
    double mean_cycle_duration = 0.0;
};

/// Generator for replication `index` under master `seed`; independent of
/// how replications are scheduled.
Rng replication_rng(std::uint64_t seed, std::uint64_t index);

struct EstimateOptions {
    /// 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Monte-Carlo estimate of M(T) from `replications` independent runs.
/// Bit-identical for a given (model, pm_time, replications, seed) whatever
/// the thread count: each replication has its own stream and the reduction
/// is a fixed-order pairwise sum.
SimulationResult estimate_mttf(const SystemModel& model, PmTime pm_time,
                               std::uint64_t replications, std::uint64_t seed,
                               EstimateOptions options = {});

}  // namespace standby::sim

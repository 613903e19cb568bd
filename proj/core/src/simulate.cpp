#include "standby/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <sstream>
#include <thread>
#include <vector>

#include "standby/errors.hpp"

namespace standby::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Pairwise summation: fixed association order for a given length.
double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double sum = 0.0;
        for (double v : values) sum += v;
        return sum;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double pairwise_sum_of_squares(std::span<const double> values, double center) {
    if (values.size() <= 8) {
        double sum = 0.0;
        for (double v : values) sum += (v - center) * (v - center);
        return sum;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum_of_squares(values.first(half), center) +
           pairwise_sum_of_squares(values.subspan(half), center);
}

}  // namespace

PmTime PmTime::at(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        std::ostringstream msg;
        msg << "PmTime: maintenance time must be positive and finite, got " << t;
        throw DomainError(msg.str());
    }
    PmTime out;
    out.value_ = t;
    out.finite_ = true;
    return out;
}

double uniform_open_closed(Rng& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

double sample_lifetime(const Distribution& d, Rng& rng) {
    switch (d.kind()) {
        case Distribution::Kind::exponential:
            return -std::log(uniform_open_closed(rng)) / d.rate();
        case Distribution::Kind::weibull:
            return d.scale() * std::pow(-std::log(uniform_open_closed(rng)), 1.0 / d.shape());
        case Distribution::Kind::min_of: {
            double out = std::numeric_limits<double>::infinity();
            for (const auto& c : d.components()) out = std::min(out, sample_lifetime(c, rng));
            return out;
        }
        case Distribution::Kind::max_of: {
            double out = 0.0;
            for (const auto& c : d.components()) out = std::max(out, sample_lifetime(c, rng));
            return out;
        }
    }
    return 0.0;
}

CycleOutcome run_cycle(const CycleDraws& draws, PmTime pm_time) {
    const bool maintained = pm_time.finite() && draws.main > pm_time.value();
    const double uptime = maintained ? pm_time.value() : draws.main;
    const double downtime = maintained ? draws.maintenance : draws.repair;
    return {uptime + std::min(draws.standby, downtime), draws.standby < downtime};
}

TauSample simulate_tau(const SystemModel& model, PmTime pm_time, Rng& rng) {
    constexpr double kUnused = std::numeric_limits<double>::quiet_NaN();
    return simulate_tau(pm_time, [&]() {
        CycleDraws draws{};
        draws.main = sample_lifetime(model.main(), rng);
        draws.standby = -std::log(uniform_open_closed(rng)) / model.standby_rate();
        const bool maintained = pm_time.finite() && draws.main > pm_time.value();
        draws.repair = maintained ? kUnused : sample_lifetime(model.repair(), rng);
        draws.maintenance = maintained ? sample_lifetime(model.maintenance(), rng) : kUnused;
        return draws;
    });
}

Rng replication_rng(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index ^ 0x5851f42d4c957f2dULL)));
}

SimulationResult estimate_mttf(const SystemModel& model, PmTime pm_time,
                               std::uint64_t replications, std::uint64_t seed,
                               EstimateOptions options) {
    if (replications < 2) throw DomainError("estimate_mttf: need at least two replications");

    std::vector<double> times(replications);
    std::vector<double> cycles(replications);
    const auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            Rng rng = replication_rng(seed, i);
            const TauSample sample = simulate_tau(model, pm_time, rng);
            times[i] = sample.time;
            cycles[i] = static_cast<double>(sample.cycles);
        }
    };

    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = static_cast<unsigned>(
        std::clamp<std::uint64_t>(threads == 0 ? 1 : threads, 1, replications));
    if (threads == 1) {
        run_range(0, replications);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        const std::uint64_t chunk = (replications + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = t * chunk;
            const std::uint64_t end = std::min(replications, begin + chunk);
            if (begin >= end) break;
            workers.emplace_back(run_range, begin, end);
        }
    }

    const double n = static_cast<double>(replications);
    SimulationResult out;
    out.replications = replications;
    out.seed = seed;
    const double total_time = pairwise_sum(times);
    const double total_cycles = pairwise_sum(cycles);
    out.estimate = total_time / n;
    out.std_error = std::sqrt(pairwise_sum_of_squares(times, out.estimate) / (n - 1.0) / n);
    out.mean_cycles = total_cycles / n;
    out.cycles_std_error =
        std::sqrt(pairwise_sum_of_squares(cycles, out.mean_cycles) / (n - 1.0) / n);
    out.mean_cycle_duration = total_time / total_cycles;
    return out;
}

}  // namespace standby::sim

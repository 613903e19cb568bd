#include "standby/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "standby/errors.hpp"
#include "standby/quadrature.hpp"

namespace standby {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

void require_time(double t, const char* op) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        std::ostringstream msg;
        msg << op << ": time must be finite and nonnegative, got " << t;
        throw DomainError(msg.str());
    }
}

// log(1 - e^x) for x <= 0.
double log1mexp(double x) {
    if (x == -kInf) return 0.0;
    if (x > -M_LN2) return std::log(-std::expm1(x));
    return std::log1p(-std::exp(x));
}

bool all_exponential(const Distribution& d) {
    if (d.kind() == Distribution::Kind::exponential) return true;
    if (d.kind() != Distribution::Kind::min_of) return false;
    const auto parts = d.components();
    return std::all_of(parts.begin(), parts.end(), all_exponential);
}

// Total rate of an exponential or a series system of exponentials.
double total_rate(const Distribution& d) {
    if (d.kind() == Distribution::Kind::exponential) return d.rate();
    double sum = 0.0;
    for (const auto& c : d.components()) sum += total_rate(c);
    return sum;
}

// Initial piece width for a tail integral of a nonincreasing log integrand:
// shrink until the integrand keeps at least 1% of its value across the piece.
double tail_width(const std::function<double(double)>& log_f, double start, double guess) {
    double width = positive_finite(guess) ? guess : 1.0;
    const double at_start = log_f(start);
    for (int i = 0; i < 2000; ++i) {
        if (log_f(start + width) - at_start >= std::log(1e-2)) break;
        width *= 0.5;
    }
    return width;
}

// Survival behaves like 1 - c x^k near zero for the smallest Weibull shape
// k < 1 in the tree; integrating in u = x^k removes the singular slope.
double origin_power(const Distribution& d) {
    switch (d.kind()) {
        case Distribution::Kind::exponential:
            return 1.0;
        case Distribution::Kind::weibull:
            return d.shape() < 1.0 ? 1.0 / d.shape() : 1.0;
        default: {
            double p = 1.0;
            for (const auto& c : d.components()) p = std::max(p, origin_power(c));
            return p;
        }
    }
}

}  // namespace

struct Distribution::Node {
    Kind kind;
    double first = 0.0;
    double second = 0.0;
    std::vector<Distribution> children;
};

Distribution::Distribution(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Distribution Distribution::exponential(double rate) {
    if (!positive_finite(rate)) {
        std::ostringstream msg;
        msg << "exponential: rate must be positive and finite, got " << rate;
        throw DomainError(msg.str());
    }
    return Distribution(std::make_shared<const Node>(Node{Kind::exponential, rate, 0.0, {}}));
}

Distribution Distribution::weibull(double scale, double shape) {
    if (!positive_finite(scale) || !positive_finite(shape)) {
        std::ostringstream msg;
        msg << "weibull: scale and shape must be positive and finite, got (" << scale << ", "
            << shape << ")";
        throw DomainError(msg.str());
    }
    return Distribution(std::make_shared<const Node>(Node{Kind::weibull, scale, shape, {}}));
}

Distribution Distribution::min_of(std::vector<Distribution> components) {
    if (components.size() < 2) throw DomainError("min_of: needs at least two components");
    return Distribution(
        std::make_shared<const Node>(Node{Kind::min_of, 0.0, 0.0, std::move(components)}));
}

Distribution Distribution::max_of(std::vector<Distribution> components) {
    if (components.size() < 2) throw DomainError("max_of: needs at least two components");
    return Distribution(
        std::make_shared<const Node>(Node{Kind::max_of, 0.0, 0.0, std::move(components)}));
}

Distribution::Kind Distribution::kind() const noexcept { return node_->kind; }

double Distribution::rate() const {
    if (kind() != Kind::exponential) throw PreconditionError("rate(): not an exponential");
    return node_->first;
}

double Distribution::scale() const {
    if (kind() != Kind::weibull) throw PreconditionError("scale(): not a Weibull");
    return node_->first;
}

double Distribution::shape() const {
    if (kind() != Kind::weibull) throw PreconditionError("shape(): not a Weibull");
    return node_->second;
}

std::span<const Distribution> Distribution::components() const noexcept {
    return node_->children;
}

bool operator==(const Distribution& lhs, const Distribution& rhs) {
    if (lhs.node_ == rhs.node_) return true;
    const auto& a = *lhs.node_;
    const auto& b = *rhs.node_;
    return a.kind == b.kind && a.first == b.first && a.second == b.second &&
           a.children == b.children;
}

std::string to_string(const Distribution& d) {
    std::ostringstream out;
    switch (d.kind()) {
        case Distribution::Kind::exponential:
            out << "exponential(" << d.rate() << ")";
            break;
        case Distribution::Kind::weibull:
            out << "weibull(" << d.scale() << "," << d.shape() << ")";
            break;
        case Distribution::Kind::min_of:
        case Distribution::Kind::max_of: {
            out << (d.kind() == Distribution::Kind::min_of ? "min_of[" : "max_of[");
            const auto parts = d.components();
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) out << ", ";
                out << to_string(parts[i]);
            }
            out << "]";
            break;
        }
    }
    return out.str();
}

double log_survival(const Distribution& d, double t) {
    require_time(t, "survival");
    switch (d.kind()) {
        case Distribution::Kind::exponential:
            return -d.rate() * t;
        case Distribution::Kind::weibull:
            return -std::pow(t / d.scale(), d.shape());
        case Distribution::Kind::min_of: {
            double sum = 0.0;
            for (const auto& c : d.components()) sum += log_survival(c, t);
            return sum;
        }
        case Distribution::Kind::max_of: {
            // S = 1 - prod F_i, accumulated as sum of log F_i.
            double log_all_failed = 0.0;
            for (const auto& c : d.components()) log_all_failed += log1mexp(log_survival(c, t));
            return log1mexp(log_all_failed);
        }
    }
    return 0.0;
}

double survival(const Distribution& d, double t) { return std::exp(log_survival(d, t)); }

double cdf(const Distribution& d, double t) { return -std::expm1(log_survival(d, t)); }

namespace {

// Hazard without the support check; components of a parallel node may have
// underflowed survival while the node itself has not.
double raw_hazard(const Distribution& d, double t) {
    switch (d.kind()) {
        case Distribution::Kind::exponential:
            return d.rate();
        case Distribution::Kind::weibull: {
            const double k = d.shape();
            const double beta = d.scale();
            return (k / beta) * std::pow(t / beta, k - 1.0);
        }
        case Distribution::Kind::min_of: {
            double sum = 0.0;
            for (const auto& c : d.components()) sum += raw_hazard(c, t);
            return sum;
        }
        case Distribution::Kind::max_of: {
            // f = sum_i h_i S_i prod_{j != i} F_j, divided by S in log space.
            const double log_s = log_survival(d, t);
            const auto parts = d.components();
            std::vector<double> log_si(parts.size());
            std::vector<double> log_fi(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i) {
                log_si[i] = log_survival(parts[i], t);
                log_fi[i] = log1mexp(log_si[i]);
            }
            double r = 0.0;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                double log_others = 0.0;
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    if (j != i) log_others += log_fi[j];
                }
                const double weight = std::exp(log_si[i] + log_others - log_s);
                if (weight == 0.0) continue;
                r += raw_hazard(parts[i], t) * weight;
            }
            return r;
        }
    }
    return 0.0;
}

}  // namespace

double hazard(const Distribution& d, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        std::ostringstream msg;
        msg << "hazard: time must be positive and finite, got " << t;
        throw DomainError(msg.str());
    }
    if (survival(d, t) == 0.0) throw BeyondSupport("hazard: survival underflows");
    return raw_hazard(d, t);
}

double density(const Distribution& d, double t) { return hazard(d, t) * survival(d, t); }

double survival_quantile(const Distribution& d, double level) {
    if (!(level > 0.0 && level < 1.0)) throw DomainError("survival_quantile: level must be in (0,1)");
    const double target = std::log(level);
    double lo = 0.0;
    double hi = 1.0;
    if (log_survival(d, hi) > target) {
        int guard = 0;
        while (log_survival(d, hi) > target) {
            lo = hi;
            hi *= 2.0;
            if (++guard > 2000 || !std::isfinite(hi)) {
                throw NumericError("survival_quantile: survival does not reach level");
            }
        }
    } else {
        while (hi > 1e-300 && log_survival(d, hi * 0.5) <= target) hi *= 0.5;
        lo = hi * 0.5;
    }
    for (int i = 0; i < 400 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = lo + 0.5 * (hi - lo);
        if (log_survival(d, mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

double integrated_survival(const Distribution& d, double t) {
    require_time(t, "integrated_survival");
    if (t == 0.0) return 0.0;
    if (all_exponential(d)) {
        const double rate = total_rate(d);
        return -std::expm1(-rate * t) / rate;
    }
    if (d.kind() == Distribution::Kind::weibull) {
        const double k = d.shape();
        const double beta = d.scale();
        return beta * std::tgamma(1.0 + 1.0 / k) *
               boost::math::gamma_p(1.0 / k, std::pow(t / beta, k));
    }
    double upper = t;
    if (log_survival(d, t) < std::log(1e-17)) upper = std::min(t, survival_quantile(d, 1e-17));
    return numeric::integrate_near_origin([&](double x) { return survival(d, x); }, 0.0, upper,
                                          origin_power(d));
}

double mrl(const Distribution& d, double t) {
    require_time(t, "mrl");
    const double log_s0 = log_survival(d, t);
    if (std::exp(log_s0) == 0.0) throw BeyondSupport("mrl: survival underflows");
    if (all_exponential(d)) return 1.0 / total_rate(d);

    const auto log_ratio = [&](double x) { return log_survival(d, x) - log_s0; };
    double guess = 1.0;
    if (t > 0.0) {
        const double r = hazard(d, t);
        if (positive_finite(r)) guess = 1.0 / r;
    }
    const double width = tail_width(log_ratio, t, guess);
    return numeric::integrate_log_tail(log_ratio, t, width, origin_power(d));
}

double mrl_slope(const Distribution& d, double t) { return mrl(d, t) * hazard(d, t) - 1.0; }

double mean(const Distribution& d) {
    double value = 0.0;
    switch (d.kind()) {
        case Distribution::Kind::exponential:
            value = 1.0 / d.rate();
            break;
        case Distribution::Kind::weibull:
            value = d.scale() * std::tgamma(1.0 + 1.0 / d.shape());
            break;
        default:
            value = all_exponential(d) ? 1.0 / total_rate(d) : mrl(d, 0.0);
    }
    if (!std::isfinite(value) || !(value > 0.0)) throw NumericError("mean: nonfinite mean");
    return value;
}

double survival_laplace(const Distribution& d, double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw DomainError("survival_laplace: argument must be finite and nonnegative");
    }
    if (s == 0.0) return mean(d);
    if (all_exponential(d)) return 1.0 / (s + total_rate(d));
    const auto log_f = [&](double x) { return -s * x + log_survival(d, x); };
    const double width = tail_width(log_f, 0.0, 1.0);
    return numeric::integrate_log_tail(log_f, 0.0, width, origin_power(d));
}

HazardLimit hazard_limit(const Distribution& d) {
    switch (d.kind()) {
        case Distribution::Kind::exponential:
            return {d.rate(), false};
        case Distribution::Kind::weibull: {
            const double k = d.shape();
            if (k > 1.0) return {kInf, false};
            if (k == 1.0) return {1.0 / d.scale(), false};
            return {0.0, false};
        }
        case Distribution::Kind::min_of: {
            HazardLimit out{0.0, false};
            for (const auto& c : d.components()) {
                const auto part = hazard_limit(c);
                out.value += part.value;
                out.numeric = out.numeric || part.numeric;
            }
            return out;
        }
        case Distribution::Kind::max_of: {
            // The heaviest tail dominates a parallel arrangement.
            HazardLimit out{kInf, false};
            for (const auto& c : d.components()) {
                const auto part = hazard_limit(c);
                out.value = std::min(out.value, part.value);
                out.numeric = out.numeric || part.numeric;
            }
            return out;
        }
    }
    return {std::numeric_limits<double>::quiet_NaN(), true};
}

HazardLimit hazard_at_origin(const Distribution& d) {
    switch (d.kind()) {
        case Distribution::Kind::exponential:
            return {d.rate(), false};
        case Distribution::Kind::weibull: {
            const double k = d.shape();
            if (k < 1.0) return {kInf, false};
            if (k == 1.0) return {1.0 / d.scale(), false};
            return {0.0, false};
        }
        case Distribution::Kind::min_of: {
            HazardLimit out{0.0, false};
            for (const auto& c : d.components()) {
                const auto part = hazard_at_origin(c);
                out.value += part.value;
                out.numeric = out.numeric || part.numeric;
            }
            return out;
        }
        case Distribution::Kind::max_of: {
            const auto parts = d.components();
            const bool bounded = std::all_of(parts.begin(), parts.end(), [](const auto& c) {
                return std::isfinite(hazard_at_origin(c).value);
            });
            if (bounded) return {0.0, false};
            const double t = 1e-12 * survival_quantile(d, 0.5);
            return {hazard(d, t), true};
        }
    }
    return {std::numeric_limits<double>::quiet_NaN(), true};
}

std::string to_string(HazardKind kind) {
    switch (kind) {
        case HazardKind::ifr: return "ifr";
        case HazardKind::dfr: return "dfr";
        case HazardKind::bfr: return "bfr";
        case HazardKind::ubfr: return "ubfr";
        case HazardKind::unclassified: return "unclassified";
    }
    return "unclassified";
}

}  // namespace standby

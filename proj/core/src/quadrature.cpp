#include "standby/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "standby/errors.hpp"

namespace standby::numeric {

namespace {

constexpr int kMaxSegments = 2000;
constexpr int kMaxTailPieces = 4096;

struct Segment {
    double lo;
    double hi;
    double value;
    double error;
};

// One 61-point Kronrod pass on [lo, hi]. The rule is applied on [-1, 1] to
// the rescaled integrand because Boost 1.74 reports the Kronrod-Gauss
// difference without the interval scale factor.
Segment apply_rule(const std::function<double(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const auto g = [&](double u) { return half * f(mid + half * u); };
    double error = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, -1.0, 1.0, 0, 0.0, &error);
    return {lo, hi, value, error};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 QuadratureTolerance tol) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        std::ostringstream msg;
        msg << "integrate: invalid interval [" << lo << ", " << hi << "]";
        throw DomainError(msg.str());
    }
    if (lo == hi) return 0.0;

    // Globally adaptive: always bisect the segment with the largest error.
    const auto by_error = [](const Segment& x, const Segment& y) { return x.error < y.error; };
    std::vector<Segment> heap{apply_rule(f, lo, hi)};
    double result = heap.front().value;
    double error = heap.front().error;
    while (std::isfinite(result) && error > std::max(tol.absolute, tol.relative * std::abs(result))) {
        if (static_cast<int>(heap.size()) >= kMaxSegments) break;
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(worst.lo < mid && mid < worst.hi)) {
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), by_error);
            break;
        }
        for (const Segment& part : {apply_rule(f, worst.lo, mid), apply_rule(f, mid, worst.hi)}) {
            heap.push_back(part);
            std::push_heap(heap.begin(), heap.end(), by_error);
        }
        // Re-sum instead of updating incrementally so cancellation cannot drift.
        result = 0.0;
        error = 0.0;
        for (const Segment& s : heap) {
            result += s.value;
            error += s.error;
        }
    }

    if (!std::isfinite(result)) {
        std::ostringstream msg;
        msg << "integrate: nonfinite result on [" << lo << ", " << hi << "]";
        throw NumericError(msg.str());
    }
    if (error > std::max(tol.absolute, tol.relative * std::abs(result))) {
        std::ostringstream msg;
        msg << "integrate: error estimate " << error << " exceeds tolerance on [" << lo << ", "
            << hi << "] (result " << result << ")";
        throw NumericError(msg.str());
    }
    return result;
}

double integrate_near_origin(const std::function<double(double)>& f, double lo, double hi,
                             double power, QuadratureTolerance tol) {
    if (!(power > 1.0) || !(lo >= 0.0) || !(lo < hi - lo)) return integrate(f, lo, hi, tol);
    const double inv = 1.0 / power;
    const auto g = [&](double u) { return f(std::pow(u, power)) * power * std::pow(u, power - 1.0); };
    return integrate(g, std::pow(lo, inv), std::pow(hi, inv), tol);
}

double integrate_log_tail(const std::function<double(double)>& log_f, double start,
                          double first_width, double origin_power, QuadratureTolerance tol) {
    if (!(first_width > 0.0) || !std::isfinite(first_width)) {
        throw DomainError("integrate_log_tail: width must be positive and finite");
    }
    const auto f = [&](double x) { return std::exp(log_f(x)); };

    double total = 0.0;
    double lo = start;
    double width = first_width;
    for (int piece = 0; piece < kMaxTailPieces; ++piece) {
        const double hi = lo + width;
        total += integrate_near_origin(f, lo, hi, origin_power, tol);
        const double edge = log_f(hi) + std::log(width);
        if (edge == -std::numeric_limits<double>::infinity() ||
            (total > 0.0 && edge < std::log(total) + std::log(1e-17))) {
            return total;
        }
        lo = hi;
        width *= 2.0;
        if (!std::isfinite(lo + width)) break;
    }
    throw NumericError("integrate_log_tail: tail did not decay (nonfinite integral)");
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
              int max_iterations) {
    const bool lo_negative = f(lo) < 0.0;
    if ((f(hi) < 0.0) == lo_negative) {
        std::ostringstream msg;
        msg << "bisect: no sign change on [" << lo << ", " << hi << "]";
        throw NumericError(msg.str());
    }
    for (int i = 0; i < max_iterations && hi - lo > abs_tol; ++i) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        if ((f(mid) < 0.0) == lo_negative) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo + 0.5 * (hi - lo);
}

}  // namespace standby::numeric

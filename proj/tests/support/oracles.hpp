#pragma once

// Reference computations that share no code with the library: composite
// rules, golden-section search, plain bisection and closed forms.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace oracle {

inline double trapezoid(const std::function<double(double)>& f, double lo, double hi,
                        std::size_t n) {
    const double h = (hi - lo) / static_cast<double>(n);
    double sum = 0.5 * (f(lo) + f(hi));
    for (std::size_t i = 1; i < n; ++i) sum += f(lo + h * static_cast<double>(i));
    return sum * h;
}

/// Composite Simpson with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double lo, double hi,
                      std::size_t n) {
    if (n % 2 != 0) ++n;
    const double h = (hi - lo) / static_cast<double>(n);
    double sum = f(lo) + f(hi);
    for (std::size_t i = 1; i < n; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(lo + h * static_cast<double>(i));
    }
    return sum * h / 3.0;
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-13) {
    double flo = f(lo);
    if ((flo < 0) == (f(hi) < 0)) throw std::runtime_error("oracle::bisect: no sign change");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                                 double tol = 1e-10) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

// Weibull(1, 2): S = exp(-t^2).
inline double w12_survival(double t) { return std::exp(-t * t); }
inline double w12_mrl(double t) {
    return std::exp(t * t) * std::sqrt(std::numbers::pi) / 2.0 * std::erfc(t);
}
inline double w12_phi(double t) {
    return std::sqrt(std::numbers::pi) * t * std::erf(t) + std::exp(-t * t);
}

// Max of Exp(b1), Exp(b2).
inline double max_exp_survival(double b1, double b2, double t) {
    return std::exp(-b1 * t) + std::exp(-b2 * t) - std::exp(-(b1 + b2) * t);
}
inline double max_exp_tail(double b1, double b2, double t) {
    return std::exp(-b1 * t) / b1 + std::exp(-b2 * t) / b2 - std::exp(-(b1 + b2) * t) / (b1 + b2);
}
inline double max_exp_hazard(double b1, double b2, double t) {
    return (b1 * std::exp(b2 * t) + b2 * std::exp(b1 * t) - b1 - b2) /
           (std::exp(b1 * t) + std::exp(b2 * t) - 1.0);
}
inline double max_exp_mean(double b1, double b2) { return 1 / b1 + 1 / b2 - 1 / (b1 + b2); }

}  // namespace oracle

#pragma once

#include <functional>

namespace standby::numeric {

struct QuadratureTolerance {
    double absolute = 1e-10;
    double relative = 1e-8;
};

/// Adaptive Gauss-Kronrod (61 point) integral of `f` over the finite interval
/// [lo, hi]. Throws NumericError if the error estimate exceeds
/// max(absolute, relative * |result|) or the result is not finite.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 QuadratureTolerance tol = {});

/// Same as integrate(), but when the interval reaches down to the origin
/// (lo < hi - lo) it substitutes x = u^power, which smooths integrands that
/// behave like 1 - x^(1/power) near zero. power <= 1 disables the change.
double integrate_near_origin(const std::function<double(double)>& f, double lo, double hi,
                             double power, QuadratureTolerance tol = {});

/// Integral over [start, inf) of exp(log_f(x)) for a nonincreasing tail.
///
/// The half line is cut into pieces of geometrically growing width starting
/// at `first_width`; summation stops once the integrand at the right end of
/// a piece times its width is below 1e-17 of the running total.
double integrate_log_tail(const std::function<double(double)>& log_f, double start,
                          double first_width, double origin_power = 1.0,
                          QuadratureTolerance tol = {});

/// Bracketing bisection for a sign change of `f` on [lo, hi]. `f(lo)` and
/// `f(hi)` must have opposite signs (zero counts as the sign of `f(hi)`).
/// Stops when the bracket is narrower than `abs_tol`.
double bisect(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
              int max_iterations = 400);

}  // namespace standby::numeric

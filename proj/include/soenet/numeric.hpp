#pragma once

#include <functional>

namespace soenet {

/// Exponent distance below which x^s is integrated with the logarithmic
/// antiderivative instead of x^(s+1)/(s+1).
inline constexpr double kSingularExponentTolerance = 1e-9;

/// Integral of x^s over [a, b] for 0 < a <= b, in closed form.
double power_integral(double s, double a, double b);

/// Adaptive Gauss-Kronrod quadrature of f over [a, b], 0 < a <= b, carried out
/// in log space (x = e^u) so that power-law integrands become smooth.
/// Throws NumericalFailure if the error estimate exceeds `rel_tol`.
double integrate_log_space(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-13);

}  // namespace soenet

#include "soenet/numeric.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "soenet/error.hpp"

namespace soenet {

double power_integral(double s, double a, double b) {
  if (!(a > 0.0) || b < a) throw InvalidArgument("power_integral: need 0 < a <= b");
  if (std::abs(s + 1.0) < kSingularExponentTolerance) return std::log(b / a);
  const double e = s + 1.0;
  // x^e evaluated relative to a keeps precision when b is close to a.
  return std::pow(a, e) * std::expm1(e * std::log(b / a)) / e;
}

double integrate_log_space(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  if (!(a > 0.0) || b < a) throw InvalidArgument("integrate_log_space: need 0 < a <= b");
  if (a == b) return 0.0;
  auto g = [&](double u) {
    const double x = std::exp(u);
    return f(x) * x;
  };
  double err = 0.0, l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      g, std::log(a), std::log(b), 20, rel_tol * 0.1, &err, &l1);
  if (!std::isfinite(value) || err > rel_tol * std::max(l1, std::abs(value)))
    throw NumericalFailure("quadrature did not reach the requested tolerance");
  return value;
}

}  // namespace soenet

#include "soenet/scaling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "soenet/error.hpp"
#include "soenet/numeric.hpp"

namespace soenet {

void DegreeLaw::validate() const {
  if (!std::isfinite(gamma) || !(gamma > 0.0)) throw InvalidArgument("degree law: gamma must be positive");
  if (!(k_min >= 1.0)) throw InvalidArgument("degree law: k_min must be at least 1");
  if (!(k_max > k_min)) throw InvalidArgument("degree law: k_max must exceed k_min");
}

double normalization(double gamma, double k_min, double k_max) {
  DegreeLaw{gamma, k_min, k_max}.validate();
  return 1.0 / power_integral(-gamma, k_min, k_max);
}

double max_degree(double gamma, double k_min, double n_tot) {
  if (!(n_tot >= 2.0)) throw InvalidArgument("max_degree: n_tot must be at least 2");
  if (!(gamma > 0.0) || !(k_min >= 1.0)) throw InvalidArgument("max_degree: need gamma > 0 and k_min >= 1");
  // Start from the untruncated estimate, which is exact as k_max -> infinity
  // for gamma > 1.
  double k = gamma > 1.0 ? std::pow((gamma - 1.0) * std::pow(k_min, gamma - 1.0) * n_tot, 1.0 / gamma)
                         : 2.0 * k_min;
  if (!(k > k_min)) k = 2.0 * k_min;
  for (int it = 0; it < 10000; ++it) {
    const double next = std::pow(normalization(gamma, k_min, k) * n_tot, 1.0 / gamma);
    if (!std::isfinite(next) || !(next > k_min))
      throw NumericalFailure("max_degree: fixed point falls below k_min for n_tot = " + std::to_string(n_tot));
    const double step = std::abs(next - k) / k;
    k = next;
    if (step < 1e-12) return k;
  }
  throw NumericalFailure("max_degree: fixed-point iteration did not converge");
}

double degree_moment(const DegreeLaw& law, double s) {
  law.validate();
  return normalization(law.gamma, law.k_min, law.k_max) * power_integral(s - law.gamma, law.k_min, law.k_max);
}

double mean_degree(const DegreeLaw& law) { return degree_moment(law, 1.0); }

double total_edges(const DegreeLaw& law, double n_tot) {
  if (!(n_tot > 0.0)) throw InvalidArgument("total_edges: n_tot must be positive");
  return n_tot * mean_degree(law);
}

DegreeLaw degree_law_for_network(double gamma, double k_min, double n_tot) {
  return DegreeLaw{gamma, k_min, max_degree(gamma, k_min, n_tot)};
}

double pool_diameter(double velocity, double frequency) {
  if (!(velocity > 0.0) || !(frequency > 0.0))
    throw InvalidArgument("pool_diameter: velocity and frequency must be positive");
  return velocity / frequency;
}

double pool_area(double velocity, double frequency) {
  const double d = pool_diameter(velocity, frequency);
  return std::numbers::pi * d * d / 4.0;
}

double pool_count_ratio(const PoolParams& a, const PoolParams& b) {
  if (!(a.velocity > 0) || !(a.width > 0) || !(b.velocity > 0) || !(b.width > 0))
    throw InvalidArgument("pool_count_ratio: velocities and widths must be positive");
  const double r = (a.velocity * b.width) / (a.width * b.velocity);
  return r * r;
}

std::vector<DegreeSweepRow> degree_law_sweep(const std::vector<double>& gammas, double k_min,
                                             const std::vector<double>& n_values) {
  std::vector<DegreeSweepRow> rows;
  rows.reserve(gammas.size() * n_values.size());
  for (double gamma : gammas) {
    for (double n : n_values) {
      const DegreeLaw law = degree_law_for_network(gamma, k_min, n);
      rows.push_back({n, gamma, law.k_max, mean_degree(law), total_edges(law, n)});
    }
  }
  return rows;
}

}  // namespace soenet

#include "soenet/power.hpp"

#include <cmath>

#include "soenet/error.hpp"
#include "soenet/numeric.hpp"

namespace soenet {

namespace {
bool positive(double v) { return std::isfinite(v) && v > 0.0; }
}  // namespace

void PowerParams::validate() const {
  if (!positive(planck_h) || !positive(nu) || !positive(eta) || !positive(zeta) || !positive(chi) ||
      !positive(n_fq) || !positive(i_c) || !positive(phi0))
    throw InvalidArgument("power params: device constants must be positive");
  if (!positive(gamma) || !std::isfinite(mu)) throw InvalidArgument("power params: exponents must be finite, gamma > 0");
  if (!positive(k_min) || k_max < k_min) throw InvalidArgument("power params: need 0 < k_min <= k_max");
  if (!positive(f_min) || f_max < f_min) throw InvalidArgument("power params: need 0 < f_min <= f_max");
  if (!std::isfinite(static_power) || static_power < 0.0)
    throw InvalidArgument("power params: static_power must be non-negative");
}

double energy_per_edge(const PowerParams& p) {
  return p.zeta * p.planck_h * p.nu / p.eta + p.chi * p.n_fq * p.i_c * p.phi0;
}

FiringEnergy firing_energy(double k, const PowerParams& p) {
  if (!(k >= 0.0)) throw InvalidArgument("firing_energy: k must be non-negative");
  FiringEnergy e;
  e.photonic = p.zeta * p.planck_h * p.nu / p.eta * k;
  e.fluxonic = p.chi * p.n_fq * p.i_c * p.phi0 * k;
  e.total = e.photonic + e.fluxonic;
  return e;
}

double frequency_normalization(double mu, double f_min, double f_max) {
  if (!positive(f_min) || !(f_max > f_min)) throw InvalidArgument("frequency_normalization: need 0 < f_min < f_max");
  return 1.0 / power_integral(-mu, f_min, f_max);
}

double power_law_mean(double exponent, double lo, double hi) {
  if (!positive(lo) || hi < lo) throw InvalidArgument("power_law_mean: need 0 < lo <= hi");
  if (hi == lo) return lo;
  return power_integral(1.0 - exponent, lo, hi) / power_integral(-exponent, lo, hi);
}

double network_power(double n_tot, const PowerParams& p) {
  p.validate();
  if (!(n_tot >= 0.0)) throw InvalidArgument("network_power: n_tot must be non-negative");
  return n_tot * energy_per_edge(p) * power_law_mean(p.gamma, p.k_min, p.k_max) *
         power_law_mean(p.mu, p.f_min, p.f_max);
}

double network_power_quadrature(double n_tot, const PowerParams& p) {
  p.validate();
  const double e0 = energy_per_edge(p);
  const bool delta_k = p.k_max == p.k_min;
  const bool delta_f = p.f_max == p.f_min;
  const double b1 =
      delta_k ? 1.0 : 1.0 / integrate_log_space([&](double k) { return std::pow(k, -p.gamma); }, p.k_min, p.k_max);
  const double b2 =
      delta_f ? 1.0 : 1.0 / integrate_log_space([&](double f) { return std::pow(f, -p.mu); }, p.f_min, p.f_max);
  // P_n(k, f) = E0 k f weighted by p(f), integrated over f for fixed k.
  auto over_f = [&](double k) {
    if (delta_f) return e0 * k * p.f_min;
    return integrate_log_space([&](double f) { return e0 * k * f * b2 * std::pow(f, -p.mu); }, p.f_min, p.f_max);
  };
  if (delta_k) return n_tot * over_f(p.k_min);
  return n_tot * integrate_log_space([&](double k) { return over_f(k) * b1 * std::pow(k, -p.gamma); }, p.k_min,
                                     p.k_max);
}

double total_power(double n_tot, const PowerParams& p) { return network_power(n_tot, p) + p.static_power; }

double power_density(double power, double area) {
  if (!(area > 0.0)) throw InvalidArgument("power_density: area must be positive");
  return power / area;
}

ScalingExponents scaling_exponents(double gamma, double area_exponent) {
  return {gamma - 1.0, gamma - area_exponent};
}

SpectralDensity spectral_density(double mu) {
  if (!std::isfinite(mu) || mu < 1.0) throw InvalidArgument("spectral_density: mu must be at least 1");
  return {mu - 1.0, mu == 2.0};
}

std::vector<EnergyTermRow> energy_terms_vs_eta(const std::vector<double>& etas, const PowerParams& p) {
  std::vector<EnergyTermRow> rows;
  for (double eta : etas) {
    if (!positive(eta)) throw InvalidArgument("energy_terms_vs_eta: eta must be positive");
    PowerParams q = p;
    q.eta = eta;
    const auto e = firing_energy(1.0, q);
    rows.push_back({eta, e.photonic, e.fluxonic});
  }
  return rows;
}

}  // namespace soenet

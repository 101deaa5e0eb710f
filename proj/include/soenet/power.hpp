#pragma once

#include <vector>

namespace soenet {

namespace constants {
inline constexpr double kPlanck = 6.62607015e-34;            // J s, exact in SI
inline constexpr double kElementaryCharge = 1.602176634e-19; // C, exact in SI
inline constexpr double kFluxQuantum = kPlanck / (2.0 * kElementaryCharge);  // Wb
}  // namespace constants

struct PowerParams {
  double planck_h = constants::kPlanck;
  double nu = 250e12;       ///< optical frequency, Hz
  double eta = 1e-4;        ///< photon production efficiency
  double zeta = 10.0;       ///< photons per synaptic connection
  double chi = 1.0 / 3.0;   ///< fraction of synapses firing per neuronal event
  double n_fq = 245.0;      ///< fluxons per synaptic event
  double i_c = 40e-6;       ///< junction critical current, A
  double phi0 = constants::kFluxQuantum;
  double gamma = 1.4;       ///< degree exponent
  double mu = 2.0;          ///< frequency exponent
  double k_min = 1.0;
  double k_max = 1000.0;
  double f_min = 100.0;
  double f_max = 20e6;
  double static_power = 0.0;  ///< bias dissipation added by total_power, W

  void validate() const;
};

struct FiringEnergy {
  double photonic = 0.0;  ///< zeta h nu / eta times k
  double fluxonic = 0.0;  ///< chi n_fq I_c Phi0 times k
  double total = 0.0;
};

/// Energy of one neuronal firing event for a node of degree k.
FiringEnergy firing_energy(double k, const PowerParams& p);
/// Energy per edge per firing event.
double energy_per_edge(const PowerParams& p);

/// B2 = (mu - 1) / (f_min^(1-mu) - f_max^(1-mu)); mu == 1 uses the log form.
double frequency_normalization(double mu, double f_min, double f_max);

/// Mean of x over the density proportional to x^-exponent on [lo, hi]; lo == hi
/// gives lo.
double power_law_mean(double exponent, double lo, double hi);

/// N E0 <k> <f>, the separable closed form of the double integral.
double network_power(double n_tot, const PowerParams& p);
/// The same double integral evaluated by nested quadrature.
double network_power_quadrature(double n_tot, const PowerParams& p);
/// network_power plus the static contribution.
double total_power(double n_tot, const PowerParams& p);

double power_density(double power, double area);

struct ScalingExponents {
  double power = 0.0;  ///< gamma - 1
  double area = 0.0;   ///< gamma - area_exponent
};
ScalingExponents scaling_exponents(double gamma, double area_exponent = 1.4);

struct SpectralDensity {
  double exponent = 0.0;  ///< P(f) ~ f^-exponent
  bool one_over_f = false;
};
SpectralDensity spectral_density(double mu);

struct EnergyTermRow {
  double eta = 0.0;
  double photonic = 0.0;
  double fluxonic = 0.0;
};
/// Per-edge photonic and fluxonic terms across efficiencies.
std::vector<EnergyTermRow> energy_terms_vs_eta(const std::vector<double>& etas, const PowerParams& p);

}  // namespace soenet

#pragma once

#include <cstdint>
#include <vector>

namespace soenet {

/// Continuous power-law degree density p(k) = B k^-gamma on [k_min, k_max].
struct DegreeLaw {
  double gamma = 1.6;
  double k_min = 10.0;
  double k_max = 1e4;

  void validate() const;
};

/// B = (gamma - 1) / (k_min^(1-gamma) - k_max^(1-gamma)); gamma == 1 uses
/// 1 / ln(k_max / k_min).
double normalization(double gamma, double k_min, double k_max);

/// Solves k_max = [B(k_max) n_tot]^(1/gamma), the degree expected to occur once.
/// Iterates until the relative step is below 1e-12.
double max_degree(double gamma, double k_min, double n_tot);

/// Integral over p(k) k on the law's support.
double mean_degree(const DegreeLaw& law);
/// n_tot times the mean degree.
double total_edges(const DegreeLaw& law, double n_tot);
/// Integral over p(k) k^s; s = 1 gives the mean degree.
double degree_moment(const DegreeLaw& law, double s);

/// Law with k_max taken from max_degree for a network of n_tot nodes.
DegreeLaw degree_law_for_network(double gamma, double k_min, double n_tot);

struct PoolParams {
  double velocity = 3e8;  ///< signal velocity, m/s
  double frequency = 1e6; ///< oscillation frequency, Hz
  double width = 2.7e-4;  ///< neuron width, m
};

/// Largest diameter v / f over which nodes can exchange a signal within one
/// oscillation period.
double pool_diameter(double velocity, double frequency);
/// Disk area with that diameter.
double pool_area(double velocity, double frequency);
/// (v_a w_b / (w_a v_b))^2: how many more nodes fit in platform a's pool.
double pool_count_ratio(const PoolParams& a, const PoolParams& b);

struct DegreeSweepRow {
  double n_tot = 0.0;
  double gamma = 0.0;
  double k_max = 0.0;
  double mean_degree = 0.0;
  double total_edges = 0.0;
};

/// One row per (gamma, n_tot) pair with k_max from the fixed point.
std::vector<DegreeSweepRow> degree_law_sweep(const std::vector<double>& gammas, double k_min,
                                             const std::vector<double>& n_values);

}  // namespace soenet

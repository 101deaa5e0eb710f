#include "soenet/layout.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "soenet/error.hpp"
#include "soenet/metrics.hpp"

namespace soenet {

namespace {
bool positive(double v) { return std::isfinite(v) && v > 0.0; }
}  // namespace

void PhysicalParams::validate() const {
  for (double v : {w_wg, g_wg, h_sine, l_sine, g_tap, l_tap, l_ipc, w_ipc, l_spd, r_bend, l_demux})
    if (!positive(v)) throw InvalidArgument("physical params: every length must be positive");
  if (n_spd == 0) throw InvalidArgument("physical params: n_spd must be at least 1");
  if (plane_pairs == 0) throw InvalidArgument("physical params: plane_pairs must be at least 1");
  for (auto v : level_plane_pairs)
    if (v == 0) throw InvalidArgument("physical params: level_plane_pairs entries must be at least 1");
}

double tap_pitch(const PhysicalParams& p) { return p.w_wg + p.g_tap + p.h_sine + (p.w_wg + p.w_ipc) / 2.0; }

double column_width(std::uint64_t n_row, const PhysicalParams& p) {
  if (n_row == 0) throw InvalidArgument("column_width: n_row must be at least 1");
  return 2.0 * static_cast<double>(n_row) * (tap_pitch(p) + p.g_wg) + 2.0 * p.r_bend;
}

double row_height(std::uint64_t n_nodes, const PhysicalParams& p) {
  if (n_nodes == 0) throw InvalidArgument("row_height: n_N must be at least 1");
  return static_cast<double>(n_nodes) * (tap_pitch(p) + p.n_spd * (p.w_wg + p.g_wg)) + 2.0 * p.r_bend;
}

NeuronFootprint neuron_footprint(double k_in, const PhysicalParams& p) {
  if (!(k_in >= 0.0)) throw InvalidArgument("neuron_footprint: k_in must be non-negative");
  NeuronFootprint f;
  f.height = 2.0 * p.l_spd;
  f.width = k_in * (p.w_wg + p.g_wg) + 1.5 * (p.l_tap + p.l_sine + p.l_demux + p.l_ipc + p.r_bend);
  return f;
}

std::vector<std::uint32_t> plane_pairs_per_level(const PhysicalParams& p, std::size_t levels) {
  if (!p.level_plane_pairs.empty()) {
    if (p.level_plane_pairs.size() != levels)
      throw InvalidArgument("level_plane_pairs has " + std::to_string(p.level_plane_pairs.size()) +
                            " entries for " + std::to_string(levels) + " hierarchy levels");
    return p.level_plane_pairs;
  }
  if (p.plane_pairs < levels)
    throw InvalidArgument("plane_pairs = " + std::to_string(p.plane_pairs) + " cannot give each of " +
                          std::to_string(levels) + " hierarchy levels its own pair");
  std::vector<std::uint32_t> out(levels, p.plane_pairs / static_cast<std::uint32_t>(levels));
  for (std::size_t l = 0; l < p.plane_pairs % levels; ++l) ++out[l];
  return out;
}

AreaReport network_area_exact(const SpatialGraph& g, const PhysicalParams& p) {
  p.validate();
  const auto& spec = g.hierarchy();
  const std::size_t levels = spec.depth();
  if (levels < 2) throw InvalidArgument("network_area_exact: graph needs at least two hierarchy levels");
  const auto census = hierarchy_edge_census(g);
  if (!p.allow_nonlocal && census.front() < census.back())
    throw InvalidArgument(
        "network_area_exact: more in-edges arrive from the top level than from within the sector; the "
        "stacked row-column model assumes long-range synapses sit above local ones and does not apply");

  const std::size_t n = g.n_nodes();
  std::vector<std::vector<std::uint32_t>> k_in(levels, std::vector<std::uint32_t>(n, 0));
  auto k_out = k_in;
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w : g.out(v)) {
      const std::size_t l = spec.shared_level(v, w);
      ++k_out[l][v];
      ++k_in[l][w];
    }
  }

  AreaReport r;
  r.level_plane_pairs = plane_pairs_per_level(p, levels);
  r.level_routing_area.assign(levels, 0.0);
  r.node_area.assign(n, 0.0);
  r.node_degree.assign(n, 0.0);
  std::vector<double> w_col(levels), h_row(levels), n_cell(levels);
  for (std::size_t l = 0; l < levels; ++l) {
    w_col[l] = column_width(spec.extent_rows(l), p);
    n_cell[l] = static_cast<double>(spec.cell_size(l));
    h_row[l] = row_height(spec.cell_size(l), p);
  }
  for (NodeId v = 0; v < n; ++v) {
    const double fp = neuron_footprint(static_cast<double>(g.in_degree(v)), p).area() / r.level_plane_pairs[0];
    double area = fp;
    r.footprint_area += fp;
    for (std::size_t l = 0; l < levels; ++l) {
      const double routing = (w_col[l] * k_out[l][v] / n_cell[l]) * (h_row[l] * k_in[l][v] / n_cell[l]) *
                             ((p.nitride_long_haul && l > 0) ? 2.0 : 1.0) / r.level_plane_pairs[l];
      r.level_routing_area[l] += routing;
      area += routing;
    }
    r.node_area[v] = area;
    r.node_degree[v] = 0.5 * static_cast<double>(g.in_degree(v) + g.out_degree(v));
    r.total_area += area;
  }
  try {
    const AreaLaw law = area_fit(r.node_area, r.node_degree, p.plane_pairs);
    r.fit_exponent = law.exponent;
    r.fit_coefficient = law.coefficient;
  } catch (const FitFailure&) {
  }
  return r;
}

AreaLaw area_fit(const std::vector<double>& areas, const std::vector<double>& degrees, std::uint32_t plane_pairs) {
  if (areas.size() != degrees.size()) throw InvalidArgument("area_fit: areas and degrees differ in length");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, lo = INFINITY, hi = 0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < areas.size(); ++i) {
    if (!(degrees[i] > 0.0) || !(areas[i] > 0.0)) continue;
    const double x = std::log10(degrees[i]), y = std::log10(areas[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
    lo = std::min(lo, degrees[i]);
    hi = std::max(hi, degrees[i]);
    ++m;
  }
  if (m < 10) throw FitFailure("area_fit: need at least 10 nodes with positive degree and area");
  if (hi < 10.0 * lo) throw FitFailure("area_fit: degrees span less than one decade");
  const double md = static_cast<double>(m);
  const double slope = (md * sxy - sx * sy) / (md * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / md;
  double ss = 0;
  for (std::size_t i = 0; i < areas.size(); ++i) {
    if (!(degrees[i] > 0.0) || !(areas[i] > 0.0)) continue;
    const double e = std::log10(areas[i]) - (intercept + slope * std::log10(degrees[i]));
    ss += e * e;
  }
  return {std::pow(10.0, intercept), slope, plane_pairs, std::sqrt(ss / md)};
}

namespace {
double pair_scale(const AreaLaw& fit, std::uint32_t plane_pairs) {
  if (plane_pairs == 0 || fit.plane_pairs == 0) throw InvalidArgument("plane pair counts must be at least 1");
  if (!(fit.coefficient > 0.0)) throw InvalidArgument("area law coefficient must be positive");
  return static_cast<double>(fit.plane_pairs) / plane_pairs;
}
}  // namespace

double network_area_scaling(double n_tot, const DegreeLaw& law, const AreaLaw& fit, std::uint32_t plane_pairs) {
  if (!(n_tot > 0.0)) throw InvalidArgument("network_area_scaling: n_tot must be positive");
  return n_tot * fit.coefficient * degree_moment(law, fit.exponent) * pair_scale(fit, plane_pairs);
}

double network_area_delta(double n_tot, double k0, const AreaLaw& fit, std::uint32_t plane_pairs) {
  if (!(k0 >= 1.0)) throw InvalidArgument("network_area_delta: k0 must be at least 1");
  return n_tot * fit.coefficient * std::pow(k0, fit.exponent) * pair_scale(fit, plane_pairs);
}

double scaling_capacity(double area, double gamma, double k_min, const AreaLaw& fit, std::uint32_t plane_pairs) {
  if (!(area > 0.0)) throw InvalidArgument("scaling_capacity: area must be positive");
  auto area_of = [&](double n) { return network_area_scaling(n, degree_law_for_network(gamma, k_min, n), fit, plane_pairs); };
  // The fixed point only exists once the network is large enough for the
  // degree law to reach past k_min; start the search there.
  double lo = 2.0;
  for (;; lo *= 2.0) {
    if (lo > 1e18) throw NumericalFailure("scaling_capacity: no valid network size found");
    try {
      degree_law_for_network(gamma, k_min, lo);
      break;
    } catch (const NumericalFailure&) {
    }
  }
  if (area_of(lo) > area)
    throw UndefinedResult("scaling_capacity: the smallest valid network already exceeds the area");
  double hi = lo;
  while (area_of(hi) <= area) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e18) throw NumericalFailure("scaling_capacity: capacity exceeds 1e18 nodes");
  }
  for (int it = 0; it < 200 && hi / lo > 1.0 + 1e-12; ++it) {
    const double mid = std::sqrt(lo * hi);
    (area_of(mid) <= area ? lo : hi) = mid;
  }
  return lo;
}

double delta_degree_capacity(double k0, double area, const AreaLaw& fit, std::uint32_t plane_pairs) {
  if (!(area > 0.0)) throw InvalidArgument("delta_degree_capacity: area must be positive");
  return area / network_area_delta(1.0, k0, fit, plane_pairs);
}

FeedForwardReport feedforward_metrics(std::uint64_t neurons_per_layer, const PhysicalParams& p,
                                      double loss_db_per_m) {
  p.validate();
  if (neurons_per_layer == 0) throw InvalidArgument("feedforward_metrics: neurons_per_layer must be at least 1");
  if (!(loss_db_per_m >= 0.0)) throw InvalidArgument("feedforward_metrics: loss rate must be non-negative");
  const double n = static_cast<double>(neurons_per_layer);
  FeedForwardReport r;
  // Every node receives from all n nodes of the previous layer and sends its
  // output down a private column waveguide to the row channel of the next
  // layer.
  r.layer_width = n * (neuron_footprint(n, p).width + column_width(1, p));
  r.layer_height = neuron_footprint(n, p).height + row_height(neurons_per_layer, p);
  r.max_distance = r.layer_width + 2.0 * r.layer_height;
  r.loss_db = loss_db_per_m * r.max_distance;
  return r;
}

}  // namespace soenet

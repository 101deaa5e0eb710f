#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "soenet/graph.hpp"
#include "soenet/scaling.hpp"

namespace soenet {

/// Photonic routing geometry. All lengths in meters.
struct PhysicalParams {
  double w_wg = 0.5e-6;     ///< waveguide width
  double g_wg = 1.0e-6;     ///< waveguide-to-waveguide gap
  double h_sine = 1.0e-6;   ///< sine-bend height of a power tap
  double l_sine = 1.0e-6;   ///< sine-bend length
  double g_tap = 0.5e-6;    ///< evanescent tap gap
  double l_tap = 5.0e-6;    ///< power tap length
  double l_ipc = 36e-6;     ///< inter-planar coupler length
  double w_ipc = 4.0e-6;    ///< inter-planar coupler width
  double l_spd = 10e-6;     ///< detector length
  double r_bend = 2.0e-6;   ///< bend radius
  double l_demux = 5.0e-6;  ///< demultiplexer length
  std::uint32_t n_spd = 3;  ///< detectors per synapse
  std::uint32_t plane_pairs = 3;
  /// Explicit pairs per hierarchy level; overrides the even split of
  /// plane_pairs when non-empty.
  std::vector<std::uint32_t> level_plane_pairs;
  /// Doubles the routing area of every level above the sector.
  bool nitride_long_haul = false;
  /// Evaluate graphs the locality guard of network_area_exact would reject.
  bool allow_nonlocal = false;

  void validate() const;
};

inline constexpr double kDieArea = 1e-4;                          // 1 cm x 1 cm
inline constexpr double kWaferArea = 3.141592653589793 * 0.0225;  // 300 mm disk

double tap_pitch(const PhysicalParams& p);
double column_width(std::uint64_t n_row, const PhysicalParams& p);
double row_height(std::uint64_t n_nodes, const PhysicalParams& p);

struct NeuronFootprint {
  double height = 0.0;
  double width = 0.0;
  double area() const { return height * width; }
};
NeuronFootprint neuron_footprint(double k_in, const PhysicalParams& p);

/// Pairs assigned to each of `levels` hierarchy levels. The even split gives
/// any remainder to the lowest levels.
std::vector<std::uint32_t> plane_pairs_per_level(const PhysicalParams& p, std::size_t levels);

struct AreaReport {
  std::vector<double> node_area;          ///< per-node contribution, m^2
  std::vector<double> node_degree;        ///< (k_in + k_out) / 2 per node
  std::vector<double> level_routing_area; ///< summed routing per level after plane division
  double footprint_area = 0.0;            ///< summed neuron footprints after plane division
  double total_area = 0.0;
  std::vector<std::uint32_t> level_plane_pairs;
  std::optional<double> fit_exponent;
  std::optional<double> fit_coefficient;
};

/// Area of a hierarchical network from its adjacency. Each node contributes,
/// per level, sparsity-scaled routing (column width times k_out / n_N by row
/// height times k_in / n_N, using only edges whose lowest shared level is that
/// level); the sector level also carries the neuron footprint. Each level is
/// divided by its plane pairs. Graphs with more top-level than sector-level
/// in-edges are rejected because this routing picture does not apply to them.
AreaReport network_area_exact(const SpatialGraph& g, const PhysicalParams& p);

/// A_n(k) = coefficient * k^exponent, measured with `plane_pairs` pairs.
struct AreaLaw {
  double coefficient = 0.0;
  double exponent = 0.0;
  std::uint32_t plane_pairs = 3;
  double residual = 0.0;  ///< RMS log10 residual
};

/// Log-log least squares of areas against degrees over nodes with positive
/// degree. Throws FitFailure with fewer than 10 such nodes or less than a
/// decade of spread.
AreaLaw area_fit(const std::vector<double>& areas, const std::vector<double>& degrees,
                 std::uint32_t plane_pairs = 3);

/// n_tot times the mean of A_n(k) under the degree law, rescaled from the fit's
/// plane pairs to `plane_pairs`.
double network_area_scaling(double n_tot, const DegreeLaw& law, const AreaLaw& fit, std::uint32_t plane_pairs);
/// Same with every node at degree k0.
double network_area_delta(double n_tot, double k0, const AreaLaw& fit, std::uint32_t plane_pairs);

/// Largest n_tot whose scaling-law area (k_max from the fixed point) fits in
/// `area`.
double scaling_capacity(double area, double gamma, double k_min, const AreaLaw& fit, std::uint32_t plane_pairs);
/// area / A_n(k0).
double delta_degree_capacity(double k0, double area, const AreaLaw& fit, std::uint32_t plane_pairs);

struct RouteSegment {
  std::uint32_t plane = 0;  ///< 0 = east-west plane, 1 = north-south plane
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;  ///< micrometers, y grows downward
  std::string kind;  ///< trunk, branch, coupler, tap or spd
  NodeId source = 0;
};

struct NodeBox {
  double x = 0, y = 0, width = 0, height = 0;  ///< micrometers
};

struct RoutingLayout {
  GridDims grid;
  std::vector<NodeBox> nodes;  ///< by node id
  double width = 0.0;   ///< micrometers
  double height = 0.0;
  std::vector<RouteSegment> segments;
  std::vector<NodeId> source_order;
};

/// Row-column routing plan for a single-sector graph. Sources are taken
/// center-first. Each source exits west to the central routing channel, where
/// a north trunk serves rows at or above it and a south trunk serves rows
/// below. At every target row the trunk splits into a west branch (targets
/// left of the center column) and an east branch, with a coupler at each
/// split and a tap, coupler and detector at each target. Trunk lanes and row
/// lanes are packed outward in source order.
RoutingLayout emit_routing_layout(const SpatialGraph& sector, const PhysicalParams& p);

/// SVG rendering. With `highlight` set, only that source's paths are colored.
std::string routing_svg(const RoutingLayout& layout, const PhysicalParams& p,
                        std::optional<NodeId> highlight = std::nullopt);
/// Header "plane,x0,y0,x1,y1,kind,source".
std::string routing_csv(const RoutingLayout& layout);

struct FeedForwardReport {
  double layer_width = 0.0;   ///< m
  double layer_height = 0.0;  ///< m
  double max_distance = 0.0;  ///< m, row-column path across two layers
  double loss_db = 0.0;
};

/// Two all-to-all connected layers of `neurons_per_layer` nodes in a row;
/// `loss_db_per_m` is the propagation loss.
FeedForwardReport feedforward_metrics(std::uint64_t neurons_per_layer, const PhysicalParams& p,
                                      double loss_db_per_m);

}  // namespace soenet

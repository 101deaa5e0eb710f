#pragma once

#include <cstdint>
#include <vector>

#include "soenet/graph.hpp"

namespace soenet {

/// Knobs of the spatial winner-take-more growth process.
struct GrowthParams {
  double p0_sector = 1.0;   ///< base probability while growing a sector
  double p0_higher = 0.3;   ///< base probability for inter-cell connections
  double alpha = 1.5;       ///< distance exponent
  double beta = 1.5;        ///< in-degree exponent in the effective length
  double delta = 1.5;       ///< exponent of the chance-count ramp
  double lambda = 0.45;     ///< in-degree saturation scale
  std::uint32_t n_min_chances = 1;
  double xi = 0.75;
  /// Winners per assembly step; entry i applies to hierarchy level i+1.
  std::vector<std::uint32_t> n_win_per_level = {41, 51};
  double l_min = 1.0;       ///< node pitch; distances are grid units times l_min
  std::uint64_t seed = 1;
  /// Apply the reverse (winner -> source) trial on inter-cell connections too.
  bool reciprocal_higher = true;

  void validate() const;
};

struct GenerationReport {
  std::uint64_t edges_created = 0;
  /// Edges whose reverse edge is also present.
  std::uint64_t reciprocal_edges = 0;
  /// Edge count by the lowest hierarchy level shared by the endpoints.
  std::vector<std::uint64_t> per_level_edges;
};

GenerationReport generation_report(const SpatialGraph& g);

/// L - (L - l_min) (k_in / (lambda k_in_max))^beta. Throws if L < l_min.
double effective_length(double length, double k_in, double k_in_max, const GrowthParams& params);

/// p0 (l_min / L_eff)^alpha clamped to [0, 1]; L_eff <= 0 maps to 1.
double connection_probability(double length, double k_in, double k_in_max, const GrowthParams& params,
                              double p0);

/// Degree-independent form used between cells.
double distance_probability(double length, const GrowthParams& params, double p0);

/// Node ids of a grid sorted by Euclidean distance from the grid center, ties
/// by id.
std::vector<NodeId> insertion_order(GridDims grid);

/// Grows one sector on `grid`: nodes arrive center-first and each arrival gets
/// one trial toward and one trial from every node already present.
SpatialGraph grow_sector(GridDims grid, const GrowthParams& params);

/// N_min - (N_min - xi n_s) ((k - k_min)/(k_max - k_min))^delta, rounded half
/// up and never below N_min. k_max == k_min yields N_min.
std::uint32_t chance_count(double k, double k_min, double k_max, double n_s, const GrowthParams& params);

/// Ids of the `n_win` highest total-degree nodes, ties by lower id.
std::vector<NodeId> top_degree_nodes(const SpatialGraph& block, std::uint32_t n_win);

/// Tiles `block` over `grid` and adds inter-cell connections toward the
/// degree winners of every other copy. `level` is the index of the new
/// hierarchy level and keys the random streams.
SpatialGraph assemble_level(const SpatialGraph& block, GridDims grid, std::uint32_t n_win,
                            const GrowthParams& params, std::size_t level);

/// As assemble_level, but every node is a target and each pair gets N_min
/// chances.
SpatialGraph assemble_level_partial(const SpatialGraph& block, GridDims grid, const GrowthParams& params,
                                    std::size_t level);

SpatialGraph generate_growth(const HierarchySpec& spec, const GrowthParams& params);
SpatialGraph generate_partial_growth(const HierarchySpec& spec, const GrowthParams& params);

/// Exactly n_edges distinct non-loop edges drawn uniformly without
/// replacement (Floyd's sampling over the n(n-1) ordered pairs).
SpatialGraph generate_random(const HierarchySpec& spec, std::uint64_t n_edges, std::uint64_t seed);
SpatialGraph generate_random(std::uint32_t n_nodes, std::uint64_t n_edges, std::uint64_t seed);

}  // namespace soenet

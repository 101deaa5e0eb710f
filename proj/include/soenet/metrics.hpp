#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "soenet/graph.hpp"

namespace soenet {

/// Directed clustering coefficient of one node, [(A+A^T)^3]_ii divided by
/// 2[d_tot(d_tot-1) - 2 d_bilateral]. Nodes with a non-positive denominator
/// score 0.
double clustering_coefficient(const SpatialGraph& g, NodeId node);
std::vector<double> clustering_coefficients(const SpatialGraph& g);
/// Mean over all nodes; throws InvalidArgument on an empty graph.
double mean_clustering(const SpatialGraph& g);

/// Hop distances from `src`; unreachable nodes hold -1.
std::vector<std::int32_t> bfs_distances(const SpatialGraph& g, NodeId src);

struct PathStats {
  double mean = 0.0;  ///< mean hop distance over reachable ordered pairs i != j
  std::uint64_t reachable_pairs = 0;
  std::uint64_t unreachable_pairs = 0;
  std::uint32_t diameter = 0;
};

/// All-pairs directed BFS statistics. Sources are processed 64 at a time with
/// bitmask frontiers. Throws UndefinedResult when no pair is reachable.
PathStats average_path_length(const SpatialGraph& g, unsigned threads = 0);

/// (C / L) / (C_r / L_r). Throws UndefinedResult if the baseline clustering is
/// not positive.
double small_world_index(double clustering, double path_length, double baseline_clustering,
                         double baseline_path_length);

struct PowerLawFit {
  double amplitude = 0.0;  ///< B in N(k) = B k^-gamma
  double gamma = 0.0;
  std::uint32_t k_lo = 0;
  std::uint32_t k_hi = 0;
  std::size_t bins_used = 0;
  double rms_log_residual = 0.0;  ///< RMS of log10 residuals over the bins
  double mle_gamma = 0.0;         ///< discrete continuous-approximation MLE on [k_lo, k_hi]
};

struct PowerLawFitOptions {
  std::uint32_t k_lo = 0;  ///< 0: smallest observed nonzero degree (>= 1)
  std::uint32_t k_hi = 0;  ///< 0: largest observed degree
  double bins_per_decade = 10.0;
};

/// Least-squares line through (log k, log density) of logarithmically binned
/// histogram counts. counts[k] is the number of nodes with degree k. Throws
/// FitFailure with fewer than three nonzero bins.
PowerLawFit fit_power_law(std::span<const std::uint64_t> counts, const PowerLawFitOptions& opts = {});

/// Degree at which the histogram peaks over k >= 1 (first on ties).
std::uint32_t histogram_mode(std::span<const std::uint64_t> counts);

/// Mean in-edges per node split by the lowest hierarchy level shared by the
/// endpoints (0 = same sector).
std::vector<double> hierarchy_edge_census(const SpatialGraph& g);

struct RentPartition {
  std::size_t level = 0;
  std::uint64_t cell = 0;
  std::uint64_t nodes = 0;
  std::uint64_t crossing_edges = 0;
  double exponent = 0.0;  ///< log10(n) / log10(e); NaN when e <= 1
};

struct RentAnalysis {
  std::vector<RentPartition> partitions;
  /// Slope of log10(n) against log10(mean e) across partition levels, NaN if
  /// fewer than two levels have crossing edges.
  double exponent = 0.0;
  /// Upper bound on D_T implied by p_T >= 1 - 1/D_T (infinite for p_T >= 1).
  double dimension_bound = 0.0;
  std::vector<std::string> warnings;
};

RentAnalysis rent_exponent(const SpatialGraph& g);

struct DegreeStats {
  std::uint32_t min = 0, max = 0;
  double mean = 0.0;
};
DegreeStats degree_stats(std::span<const std::uint32_t> degrees);

struct MetricsReport {
  std::string label;
  std::uint64_t n_nodes = 0;
  std::uint64_t n_edges = 0;
  double mean_clustering = 0.0;
  PathStats paths;  ///< mean is NaN when paths were not computed
  std::optional<double> swi;
  DegreeStats in_degree, out_degree, total_degree;
  std::optional<PowerLawFit> in_fit, out_fit;
  std::vector<double> census;
  RentAnalysis rent;
};

struct MetricsOptions {
  bool paths = true;
  bool fits = true;
  unsigned threads = 0;
  PowerLawFitOptions fit;
  /// Fit each distribution from its histogram mode upward.
  bool fit_from_mode = true;
};

MetricsReport compute_metrics(const SpatialGraph& g, const MetricsOptions& opts = {});

}  // namespace soenet

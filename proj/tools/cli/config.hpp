#pragma once

#include <soenet/soenet.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

struct Range {
  double min = 1.0;
  double max = 10.0;
  uint32_t points = 2;
  std::vector<double> values() const;  ///< log-spaced, endpoints included
};

struct PlatformConfig {
  double velocity = 3e8;
  double width = 2.7e-4;
};

struct PoolConfig {
  PlatformConfig soen;
  PlatformConfig brain{2.0, 2.4e-6};
  std::vector<double> frequencies{10.0, 1e6};
};

struct ScalingConfig {
  double gamma = 1.6;
  double k_min = 10.0;
};

struct SweepConfig {
  Range n_tot{1e3, 1e8, 41};
  std::vector<uint32_t> plane_pairs{3, 9};
  Range k0{10.0, 1e4, 31};
  Range frequency{1.0, 1e9, 37};
  Range fig7_n_tot{1e2, 1e9, 36};
  std::vector<double> gammas{1.3, 1.6, 2.0, 2.5};
  Range eta{1e-6, 1.0, 31};
};

struct RandomConfig {
  uint64_t n_edges = 0;  ///< 0 matches the growth network built with the same seed
};

struct RunConfig {
  std::vector<soenet_grid> hierarchy{{9, 9}, {5, 5}, {2, 2}};
  std::vector<uint64_t> seeds{1};
  std::string output = "out";
  std::vector<std::string> generators{"growth", "partial", "random"};

  soenet_growth_params growth{};
  std::vector<uint32_t> n_win;  ///< storage behind growth.n_win_per_level
  RandomConfig random;
  soenet_metrics_options metrics{};
  soenet_physical_params physical{};
  std::vector<uint32_t> level_plane_pairs;  ///< storage behind physical.level_plane_pairs
  soenet_power_params power{};
  PoolConfig pool;
  ScalingConfig scaling;
  std::optional<soenet_area_law> area_law;
  SweepConfig sweep;
  double loss_db_per_m = 20.0;
  uint64_t feedforward_neurons = 1000;

  RunConfig();
  RunConfig(const RunConfig& other);
  RunConfig& operator=(const RunConfig& other);

  /// Re-points the C structs at the owned vectors.
  void bind();
  soenet_growth_params growth_for_seed(uint64_t seed) const;
  uint64_t n_nodes() const;
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

/// Parses a config document. Absent keys keep their defaults; unknown keys
/// raise an invalid-argument Failure naming the dotted key path.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

}  // namespace cli

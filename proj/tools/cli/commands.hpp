#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace cli {

struct Options {
  RunConfig config;
  std::string format = "json";
  std::vector<std::string> inputs;  ///< analyze: graph files; area/power: one graph file
  std::string area_mode = "exact";
  std::vector<double> k0{300.0, 4000.0};
  std::vector<std::string> sweeps;
  long long highlight = -1;  ///< routing diagram: node to emphasise, -1 for the sector centre
  bool quiet = false;
};

int cmd_generate(const Options& o);
int cmd_analyze(const Options& o);
int cmd_area(const Options& o);
int cmd_power(const Options& o);
int cmd_pool(const Options& o);
int cmd_sweep(const Options& o);
int cmd_reproduce(const Options& o);

}  // namespace cli

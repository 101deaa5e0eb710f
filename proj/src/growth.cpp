#include "soenet/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "soenet/error.hpp"
#include "soenet/rng.hpp"

namespace soenet {

namespace {

// Random stream layout: level 0 uses one stream per arriving node; assembly
// levels use one stream per source node; the random baseline uses level 255.
constexpr std::uint64_t kRandomLevel = 255;

double grid_distance(std::int64_t dx, std::int64_t dy) {
  return std::sqrt(static_cast<double>(dx * dx + dy * dy));
}

// Probability that at least one of `chances` independent trials at p succeeds.
// Drawing this once is equivalent in distribution to drawing every trial,
// since a repeated success on an existing edge changes nothing.
double any_success(double p, std::uint32_t chances) {
  if (p >= 1.0) return 1.0;
  if (p <= 0.0 || chances == 0) return 0.0;
  return -std::expm1(static_cast<double>(chances) * std::log1p(-p));
}

struct CellOrigin {
  std::int64_t x, y;
};

std::vector<CellOrigin> cell_origins(const HierarchySpec& block_spec, GridDims grid) {
  const auto w = static_cast<std::int64_t>(block_spec.extent_cols(block_spec.depth() - 1));
  const auto h = static_cast<std::int64_t>(block_spec.extent_rows(block_spec.depth() - 1));
  std::vector<CellOrigin> o;
  for (std::uint32_t r = 0; r < grid.rows; ++r)
    for (std::uint32_t c = 0; c < grid.cols; ++c) o.push_back({c * w, r * h});
  return o;
}

// Shared skeleton of the two assembly variants.
template <typename ChanceFn>
SpatialGraph connect_cells(const SpatialGraph& block, GridDims grid, const std::vector<NodeId>& targets,
                           ChanceFn chances_for, const GrowthParams& params, std::size_t level) {
  SpatialGraph g = tile(block, grid);
  const auto n = static_cast<NodeId>(block.n_nodes());
  const auto origins = cell_origins(block.hierarchy(), grid);
  const auto copies = origins.size();

  for (std::size_t a = 0; a < copies; ++a) {
    for (NodeId local = 0; local < n; ++local) {
      const NodeId src = static_cast<NodeId>(a * n + local);
      CounterRng rng(params.seed, level, src);
      const std::uint32_t chances = chances_for(local);
      for (std::size_t b = 0; b < copies; ++b) {
        if (b == a) continue;
        const double len =
            grid_distance(origins[b].x - origins[a].x, origins[b].y - origins[a].y) * params.l_min;
        const double q = any_success(distance_probability(len, params, params.p0_higher), chances);
        for (NodeId w : targets) {
          const NodeId dst = static_cast<NodeId>(b * n + w);
          if (rng.uniform() < q) g.add_edge(src, dst);
          if (params.reciprocal_higher && rng.uniform() < q) g.add_edge(dst, src);
        }
      }
    }
  }
  return g;
}

}  // namespace

void GrowthParams::validate() const {
  auto prob = [](double p, const char* name) {
    if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument(std::string(name) + " must lie in (0, 1]");
  };
  prob(p0_sector, "p0_sector");
  prob(p0_higher, "p0_higher");
  prob(xi, "xi");
  if (!(lambda > 0.0)) throw InvalidArgument("lambda must be positive");
  if (!(l_min > 0.0)) throw InvalidArgument("l_min must be positive");
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(delta))
    throw InvalidArgument("alpha, beta and delta must be finite");
  if (n_min_chances < 1) throw InvalidArgument("n_min_chances must be >= 1");
}

GenerationReport generation_report(const SpatialGraph& g) {
  GenerationReport r;
  r.edges_created = g.n_edges();
  r.per_level_edges.assign(g.hierarchy().depth(), 0);
  for (NodeId s = 0; s < g.n_nodes(); ++s)
    for (NodeId d : g.out(s)) {
      ++r.per_level_edges[g.hierarchy().shared_level(s, d)];
      if (g.has_edge(d, s)) ++r.reciprocal_edges;
    }
  return r;
}

double effective_length(double length, double k_in, double k_in_max, const GrowthParams& params) {
  if (length < params.l_min * (1.0 - 1e-12))
    throw InvalidArgument("effective_length: distance below l_min");
  if (k_in < 0.0) throw InvalidArgument("effective_length: negative in-degree");
  if (k_in == 0.0) return length;
  if (!(k_in_max > 0.0)) throw InvalidArgument("effective_length: k_in_max must be positive");
  const double ratio = k_in / (params.lambda * k_in_max);
  return length - (length - params.l_min) * std::pow(ratio, params.beta);
}

double connection_probability(double length, double k_in, double k_in_max, const GrowthParams& params,
                              double p0) {
  const double l_eff = effective_length(length, k_in, k_in_max, params);
  if (l_eff <= 0.0) return 1.0;
  return std::clamp(p0 * std::pow(params.l_min / l_eff, params.alpha), 0.0, 1.0);
}

double distance_probability(double length, const GrowthParams& params, double p0) {
  return connection_probability(length, 0.0, 1.0, params, p0);
}

std::vector<NodeId> insertion_order(GridDims grid) {
  if (grid.rows == 0 || grid.cols == 0) throw InvalidArgument("insertion_order: empty grid");
  // Doubled coordinates keep the (possibly half-integer) center exact.
  const std::int64_t cx = grid.cols - 1, cy = grid.rows - 1;
  std::vector<NodeId> order(grid.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  auto d2 = [&](NodeId i) {
    const std::int64_t dx = 2 * static_cast<std::int64_t>(i % grid.cols) - cx;
    const std::int64_t dy = 2 * static_cast<std::int64_t>(i / grid.cols) - cy;
    return dx * dx + dy * dy;
  };
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return d2(a) < d2(b); });
  return order;
}

SpatialGraph grow_sector(GridDims grid, const GrowthParams& params) {
  params.validate();
  SpatialGraph g{HierarchySpec({grid})};
  const auto order = insertion_order(grid);
  const double k_in_max = static_cast<double>(grid.size()) - 1.0;
  std::vector<double> k_in(grid.size(), 0.0);
  for (std::size_t step = 1; step < order.size(); ++step) {
    const NodeId fresh = order[step];
    CounterRng rng(params.seed, 0, fresh);
    const auto pf = g.position(fresh);
    for (std::size_t j = 0; j < step; ++j) {
      const NodeId old = order[j];
      const auto po = g.position(old);
      const double len = grid_distance(po.x - pf.x, po.y - pf.y) * params.l_min;
      const double p = connection_probability(len, k_in[old], k_in_max, params, params.p0_sector);
      if (rng.uniform() < p && g.add_edge(fresh, old)) k_in[old] += 1.0;
      if (rng.uniform() < p && g.add_edge(old, fresh)) k_in[fresh] += 1.0;
    }
  }
  return g;
}

std::uint32_t chance_count(double k, double k_min, double k_max, double n_s, const GrowthParams& params) {
  const double n_min = params.n_min_chances;
  if (k_max <= k_min) return params.n_min_chances;
  if (k < k_min || k > k_max) throw InvalidArgument("chance_count: degree outside [k_min, k_max]");
  const double x = (k - k_min) / (k_max - k_min);
  const double raw = n_min - (n_min - params.xi * n_s) * std::pow(x, params.delta);
  const double rounded = std::floor(raw + 0.5);
  return static_cast<std::uint32_t>(std::max(rounded, n_min));
}

std::vector<NodeId> top_degree_nodes(const SpatialGraph& block, std::uint32_t n_win) {
  if (n_win > block.n_nodes())
    throw InvalidArgument("N_win (" + std::to_string(n_win) + ") exceeds block size (" +
                          std::to_string(block.n_nodes()) + ")");
  std::vector<NodeId> ids(block.n_nodes());
  std::iota(ids.begin(), ids.end(), NodeId{0});
  auto total = [&](NodeId i) { return block.in_degree(i) + block.out_degree(i); };
  std::stable_sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) { return total(a) > total(b); });
  ids.resize(n_win);
  return ids;
}

SpatialGraph assemble_level(const SpatialGraph& block, GridDims grid, std::uint32_t n_win,
                            const GrowthParams& params, std::size_t level) {
  params.validate();
  const auto winners = top_degree_nodes(block, n_win);
  const auto n = block.n_nodes();
  std::vector<double> k(n);
  for (NodeId i = 0; i < n; ++i) k[i] = static_cast<double>(block.in_degree(i) + block.out_degree(i));
  const double k_min = n ? *std::min_element(k.begin(), k.end()) : 0.0;
  const double k_max = n ? *std::max_element(k.begin(), k.end()) : 0.0;
  std::vector<std::uint32_t> chances(n);
  for (NodeId i = 0; i < n; ++i) chances[i] = chance_count(k[i], k_min, k_max, static_cast<double>(n), params);
  return connect_cells(
      block, grid, winners, [&](NodeId local) { return chances[local]; }, params, level);
}

SpatialGraph assemble_level_partial(const SpatialGraph& block, GridDims grid, const GrowthParams& params,
                                    std::size_t level) {
  params.validate();
  std::vector<NodeId> everyone(block.n_nodes());
  std::iota(everyone.begin(), everyone.end(), NodeId{0});
  return connect_cells(
      block, grid, everyone, [&](NodeId) { return params.n_min_chances; }, params, level);
}

SpatialGraph generate_growth(const HierarchySpec& spec, const GrowthParams& params) {
  params.validate();
  const auto& levels = spec.levels();
  if (params.n_win_per_level.size() + 1 < levels.size())
    throw InvalidArgument("n_win_per_level needs one entry per hierarchy level above the sector");
  SpatialGraph g = grow_sector(levels[0], params);
  for (std::size_t l = 1; l < levels.size(); ++l)
    g = assemble_level(g, levels[l], params.n_win_per_level[l - 1], params, l);
  return g;
}

SpatialGraph generate_partial_growth(const HierarchySpec& spec, const GrowthParams& params) {
  params.validate();
  const auto& levels = spec.levels();
  SpatialGraph g = grow_sector(levels[0], params);
  for (std::size_t l = 1; l < levels.size(); ++l) g = assemble_level_partial(g, levels[l], params, l);
  return g;
}

SpatialGraph generate_random(const HierarchySpec& spec, std::uint64_t n_edges, std::uint64_t seed) {
  const std::uint64_t n = spec.n_nodes();
  const std::uint64_t pairs = n * (n > 0 ? n - 1 : 0);
  if (n_edges > pairs)
    throw InvalidArgument("generate_random: " + std::to_string(n_edges) + " edges exceed the " +
                          std::to_string(pairs) + " available ordered pairs");
  CounterRng rng(seed, kRandomLevel, 0);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(n_edges * 2);
  std::vector<std::uint64_t> picks;
  picks.reserve(n_edges);
  for (std::uint64_t j = pairs - n_edges; j < pairs; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    const std::uint64_t v = chosen.insert(t).second ? t : j;
    if (v == j) chosen.insert(j);
    picks.push_back(v);
  }
  std::sort(picks.begin(), picks.end());
  SpatialGraph g(spec);
  for (auto idx : picks) {
    const auto s = static_cast<NodeId>(idx / (n - 1));
    auto d = static_cast<NodeId>(idx % (n - 1));
    if (d >= s) ++d;
    g.add_edge(s, d);
  }
  return g;
}

SpatialGraph generate_random(std::uint32_t n_nodes, std::uint64_t n_edges, std::uint64_t seed) {
  return generate_random(HierarchySpec({GridDims{1, n_nodes}}), n_edges, seed);
}

}  // namespace soenet

#include "soenet/graph.hpp"

#include <algorithm>

#include "soenet/error.hpp"

namespace soenet {

HierarchySpec::HierarchySpec(std::vector<GridDims> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw InvalidArgument("hierarchy must have at least one level");
  std::uint64_t size = 1, cols = 1, rows = 1;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const auto& g = levels_[l];
    if (g.rows == 0 || g.cols == 0)
      throw InvalidArgument("hierarchy level " + std::to_string(l) + " has a zero-sized grid");
    size *= g.size();
    cols *= g.cols;
    rows *= g.rows;
    if (size > std::uint64_t{0xFFFFFFFFu}) throw InvalidArgument("hierarchy exceeds 2^32 nodes");
    cell_size_.push_back(size);
    extent_cols_.push_back(cols);
    extent_rows_.push_back(rows);
  }
}

std::vector<std::uint32_t> HierarchySpec::address(NodeId node) const {
  std::vector<std::uint32_t> out(levels_.size());
  std::uint64_t below = 1;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    out[l] = static_cast<std::uint32_t>((node / below) % levels_[l].size());
    below = cell_size_[l];
  }
  return out;
}

GridPoint HierarchySpec::position(NodeId node) const {
  GridPoint p;
  std::uint64_t below = 1, pitch_x = 1, pitch_y = 1;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const auto& g = levels_[l];
    const auto idx = (node / below) % g.size();
    p.x += static_cast<std::int64_t>((idx % g.cols) * pitch_x);
    p.y += static_cast<std::int64_t>((idx / g.cols) * pitch_y);
    below = cell_size_[l];
    pitch_x = extent_cols_[l];
    pitch_y = extent_rows_[l];
  }
  return p;
}

std::size_t HierarchySpec::shared_level(NodeId a, NodeId b) const {
  for (std::size_t l = 0; l < levels_.size(); ++l)
    if (a / cell_size_[l] == b / cell_size_[l]) return l;
  return levels_.size() - 1;
}

HierarchySpec HierarchySpec::truncated(std::size_t level) const {
  if (level >= levels_.size()) throw InvalidArgument("hierarchy level out of range");
  return HierarchySpec(std::vector<GridDims>(levels_.begin(), levels_.begin() + level + 1));
}

HierarchySpec HierarchySpec::extended(GridDims grid) const {
  auto lv = levels_;
  lv.push_back(grid);
  return HierarchySpec(std::move(lv));
}

std::vector<NodePlacement> positions_for_hierarchy(const HierarchySpec& spec) {
  if (spec.depth() == 0) throw InvalidArgument("hierarchy must have at least one level");
  std::vector<NodePlacement> out;
  out.reserve(spec.n_nodes());
  for (std::uint64_t i = 0; i < spec.n_nodes(); ++i) {
    auto id = static_cast<NodeId>(i);
    out.push_back({spec.position(id), spec.address(id)});
  }
  return out;
}

SpatialGraph::SpatialGraph(HierarchySpec spec)
    : spec_(std::move(spec)), out_(spec_.n_nodes()), in_(spec_.n_nodes()) {}

void SpatialGraph::check_node(NodeId n) const {
  if (n >= out_.size())
    throw InvalidArgument("node " + std::to_string(n) + " out of range (n_nodes=" +
                          std::to_string(out_.size()) + ")");
}

bool SpatialGraph::add_edge(NodeId src, NodeId dst) {
  check_node(src);
  check_node(dst);
  if (src == dst) throw InvalidArgument("self-loop on node " + std::to_string(src));
  auto& o = out_[src];
  auto it = std::lower_bound(o.begin(), o.end(), dst);
  if (it != o.end() && *it == dst) return false;
  o.insert(it, dst);
  auto& i = in_[dst];
  i.insert(std::lower_bound(i.begin(), i.end(), src), src);
  ++n_edges_;
  return true;
}

bool SpatialGraph::has_edge(NodeId src, NodeId dst) const {
  check_node(src);
  check_node(dst);
  return std::binary_search(out_[src].begin(), out_[src].end(), dst);
}

std::vector<Edge> SpatialGraph::edges() const {
  std::vector<Edge> e;
  e.reserve(n_edges_);
  for (NodeId s = 0; s < out_.size(); ++s)
    for (NodeId d : out_[s]) e.push_back({s, d});
  return e;
}

DegreeSummary degree_summary(const SpatialGraph& g) {
  const auto n = g.n_nodes();
  DegreeSummary d;
  d.in.resize(n);
  d.out.resize(n);
  d.total.resize(n);
  d.bilateral.resize(n);
  for (NodeId i = 0; i < n; ++i) {
    auto o = g.out(i);
    auto in = g.in(i);
    d.in[i] = static_cast<std::uint32_t>(in.size());
    d.out[i] = static_cast<std::uint32_t>(o.size());
    d.total[i] = d.in[i] + d.out[i];
    // both lists are sorted
    std::uint32_t both = 0;
    for (auto a = o.begin(), b = in.begin(); a != o.end() && b != in.end();) {
      if (*a < *b) ++a;
      else if (*b < *a) ++b;
      else { ++both; ++a; ++b; }
    }
    d.bilateral[i] = both;
  }
  return d;
}

std::vector<std::uint64_t> histogram(std::span<const std::uint32_t> values) {
  std::uint32_t hi = 0;
  for (auto v : values) hi = std::max(hi, v);
  std::vector<std::uint64_t> h(values.empty() ? 0 : hi + 1);
  for (auto v : values) ++h[v];
  return h;
}

SpatialGraph tile(const SpatialGraph& block, GridDims grid) {
  SpatialGraph g(block.hierarchy().extended(grid));
  const auto n = static_cast<NodeId>(block.n_nodes());
  const auto copies = grid.size();
  const auto edges = block.edges();
  for (std::uint64_t c = 0; c < copies; ++c) {
    const auto off = static_cast<NodeId>(c * n);
    for (const auto& e : edges) g.add_edge(e.src + off, e.dst + off);
  }
  return g;
}

SpatialGraph tile_along_diagonal(const SpatialGraph& block, std::uint32_t copies) {
  if (copies == 0) throw InvalidArgument("tile_along_diagonal: copies must be >= 1");
  return tile(block, GridDims{1, copies});
}

SpatialGraph subgraph(const SpatialGraph& g, std::size_t level, std::uint64_t cell) {
  const auto& spec = g.hierarchy();
  if (level >= spec.depth()) throw InvalidArgument("subgraph: level out of range");
  if (cell >= spec.n_cells(level)) throw InvalidArgument("subgraph: cell index out of range");
  SpatialGraph sub(spec.truncated(level));
  const auto size = spec.cell_size(level);
  const auto lo = static_cast<NodeId>(cell * size);
  const auto hi = static_cast<NodeId>(lo + size);
  for (NodeId s = lo; s < hi; ++s)
    for (NodeId d : g.out(s))
      if (d >= lo && d < hi) sub.add_edge(s - lo, d - lo);
  return sub;
}

}  // namespace soenet

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace soenet {

using NodeId = std::uint32_t;

struct Edge {
  NodeId src;
  NodeId dst;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Integer grid coordinate in units of the minimum node spacing.
struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct GridDims {
  std::uint32_t rows = 1;
  std::uint32_t cols = 1;
  std::uint64_t size() const { return std::uint64_t{rows} * cols; }
  friend bool operator==(const GridDims&, const GridDims&) = default;
};

/// Nested grid description. Level 0 is the grid of nodes inside the smallest
/// cell (a sector); level l is the grid of level-(l-1) cells inside a level-l
/// cell. Node ids are assigned so every cell at every level is a contiguous
/// id range, row-major inside each grid.
class HierarchySpec {
 public:
  HierarchySpec() = default;
  explicit HierarchySpec(std::vector<GridDims> levels);

  const std::vector<GridDims>& levels() const { return levels_; }
  std::size_t depth() const { return levels_.size(); }
  std::uint64_t n_nodes() const { return cell_size_.empty() ? 0 : cell_size_.back(); }

  /// Nodes in one cell of `level` (level 0 -> sector size).
  std::uint64_t cell_size(std::size_t level) const { return cell_size_.at(level); }
  /// Grid extent (columns, rows) covered by one cell of `level`.
  std::uint64_t extent_cols(std::size_t level) const { return extent_cols_.at(level); }
  std::uint64_t extent_rows(std::size_t level) const { return extent_rows_.at(level); }
  std::uint64_t n_cells(std::size_t level) const { return n_nodes() / cell_size(level); }

  /// Index of the level-`level` cell containing `node`.
  std::uint64_t cell_of(NodeId node, std::size_t level) const { return node / cell_size_.at(level); }

  /// Per-level row-major index of the node (level 0) or of its enclosing cell
  /// (levels >= 1) inside the parent grid.
  std::vector<std::uint32_t> address(NodeId node) const;

  GridPoint position(NodeId node) const;

  /// Lowest level whose cell holds both nodes (0 = same sector).
  std::size_t shared_level(NodeId a, NodeId b) const;

  /// Spec without the levels above `level`.
  HierarchySpec truncated(std::size_t level) const;
  /// Spec with `grid` appended as a new top level.
  HierarchySpec extended(GridDims grid) const;

  friend bool operator==(const HierarchySpec& a, const HierarchySpec& b) { return a.levels_ == b.levels_; }

 private:
  std::vector<GridDims> levels_;
  std::vector<std::uint64_t> cell_size_;
  std::vector<std::uint64_t> extent_cols_;
  std::vector<std::uint64_t> extent_rows_;
};

struct NodePlacement {
  GridPoint position;
  std::vector<std::uint32_t> address;
};

/// Layout of every node of `spec` in id order; throws InvalidArgument on an
/// empty spec or zero-sized grid.
std::vector<NodePlacement> positions_for_hierarchy(const HierarchySpec& spec);

/// Binary directed graph on a hierarchical grid. Self-loops are rejected and
/// re-adding an edge is a no-op. Adjacency is kept sorted in both directions.
class SpatialGraph {
 public:
  SpatialGraph() = default;
  explicit SpatialGraph(HierarchySpec spec);

  const HierarchySpec& hierarchy() const { return spec_; }
  std::size_t n_nodes() const { return out_.size(); }
  std::size_t n_edges() const { return n_edges_; }

  /// True if the edge was new.
  bool add_edge(NodeId src, NodeId dst);
  bool has_edge(NodeId src, NodeId dst) const;

  std::span<const NodeId> out(NodeId n) const { return out_[n]; }
  std::span<const NodeId> in(NodeId n) const { return in_[n]; }
  std::size_t out_degree(NodeId n) const { return out_[n].size(); }
  std::size_t in_degree(NodeId n) const { return in_[n].size(); }

  GridPoint position(NodeId n) const { return spec_.position(n); }

  /// All edges sorted by (src, dst).
  std::vector<Edge> edges() const;

  friend bool operator==(const SpatialGraph& a, const SpatialGraph& b) {
    return a.spec_ == b.spec_ && a.out_ == b.out_;
  }

 private:
  void check_node(NodeId n) const;

  HierarchySpec spec_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::size_t n_edges_ = 0;
};

struct DegreeSummary {
  std::vector<std::uint32_t> in;
  std::vector<std::uint32_t> out;
  std::vector<std::uint32_t> total;
  /// Reciprocated partners, (A^2)_ii.
  std::vector<std::uint32_t> bilateral;
};

DegreeSummary degree_summary(const SpatialGraph& g);

/// counts[k] = number of values equal to k.
std::vector<std::uint64_t> histogram(std::span<const std::uint32_t> values);

/// Block-diagonal copies of `block` laid out on `grid`, which becomes the new
/// top hierarchy level.
SpatialGraph tile(const SpatialGraph& block, GridDims grid);
/// tile() on a 1 x copies grid.
SpatialGraph tile_along_diagonal(const SpatialGraph& block, std::uint32_t copies);

/// Induced subgraph on one cell of `level`; the result keeps levels 0..level.
SpatialGraph subgraph(const SpatialGraph& g, std::size_t level, std::uint64_t cell);

}  // namespace soenet

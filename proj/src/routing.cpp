#include <algorithm>
#include <cstdio>
#include <string>

#include "soenet/error.hpp"
#include "soenet/growth.hpp"
#include "soenet/layout.hpp"

namespace soenet {

namespace {

constexpr double kMicron = 1e6;

struct Branch {
  NodeId source;
  std::uint32_t row;
  bool west;
  std::uint32_t lane;
  std::vector<NodeId> targets;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

RoutingLayout emit_routing_layout(const SpatialGraph& sector, const PhysicalParams& p) {
  p.validate();
  const auto& spec = sector.hierarchy();
  if (spec.depth() != 1)
    throw InvalidArgument("emit_routing_layout: expects a single-sector graph (one hierarchy level), got " +
                          std::to_string(spec.depth()));
  const GridDims grid = spec.levels()[0];
  const std::uint32_t rows = grid.rows, cols = grid.cols, c_mid = cols / 2;

  RoutingLayout out;
  out.grid = grid;
  for (NodeId v : insertion_order(grid))
    if (sector.out_degree(v) > 0) out.source_order.push_back(v);

  // Lane assignment: branches claim the next free lane of their row channel
  // side, in source order, so later sources sit further from the neurons.
  std::vector<std::uint32_t> lanes_w(rows, 0), lanes_e(rows, 0);
  std::vector<Branch> branches;
  std::vector<char> has_north(sector.n_nodes(), 0), has_south(sector.n_nodes(), 0);
  for (NodeId s : out.source_order) {
    const std::uint32_t rs = s / cols;
    std::vector<std::vector<NodeId>> west(rows), east(rows);
    for (NodeId t : sector.out(s)) (t % cols < c_mid ? west : east)[t / cols].push_back(t);
    std::vector<std::uint32_t> row_order;
    for (std::uint32_t r = rs + 1; r-- > 0;) row_order.push_back(r);
    for (std::uint32_t r = rs + 1; r < rows; ++r) row_order.push_back(r);
    for (std::uint32_t r : row_order) {
      for (bool is_west : {true, false}) {
        auto& ts = is_west ? west[r] : east[r];
        if (ts.empty()) continue;
        auto& counter = is_west ? lanes_w[r] : lanes_e[r];
        branches.push_back({s, r, is_west, counter++, ts});
        (r <= rs ? has_north : has_south)[s] = 1;
      }
    }
  }

  const double pitch = (tap_pitch(p) + p.g_wg) * kMicron;
  const double rb = p.r_bend * kMicron;
  std::uint32_t k_in_max = 0;
  for (NodeId v = 0; v < sector.n_nodes(); ++v)
    k_in_max = std::max<std::uint32_t>(k_in_max, static_cast<std::uint32_t>(sector.in_degree(v)));
  const NeuronFootprint fp = neuron_footprint(k_in_max, p);
  const double wn = fp.width * kMicron, hn = fp.height * kMicron;
  const double cell_w = wn + 2.0 * rb;
  const double chan_w = 2.0 * static_cast<double>(out.source_order.size()) * pitch + 2.0 * rb;
  const double chan_x = rb + c_mid * cell_w;
  const double xc = chan_x + chan_w / 2.0;

  std::vector<double> row_top(rows + 1, rb), chan_h(rows);
  for (std::uint32_t r = 0; r < rows; ++r) {
    chan_h[r] = std::max(lanes_w[r], lanes_e[r]) * pitch + 2.0 * rb;
    row_top[r + 1] = row_top[r] + hn + chan_h[r];
  }
  auto x_left = [&](std::uint32_t c) { return rb + c * cell_w + (c >= c_mid ? chan_w : 0.0); };
  auto x_center = [&](NodeId v) { return x_left(v % cols) + wn / 2.0; };
  auto y_center = [&](NodeId v) { return row_top[v / cols] + hn / 2.0; };
  auto lane_y = [&](std::uint32_t r, std::uint32_t lane) { return row_top[r] + hn + rb + (lane + 0.5) * pitch; };

  out.width = rb + cols * cell_w + chan_w + rb;
  for (NodeId v = 0; v < sector.n_nodes(); ++v) out.nodes.push_back({x_left(v % cols), row_top[v / cols], wn, hn});
  out.height = row_top[rows] + rb;

  auto add = [&](std::uint32_t plane, double x0, double y0, double x1, double y1, const char* kind, NodeId s) {
    out.segments.push_back({plane, x0, y0, x1, y1, kind, s});
  };

  std::size_t b = 0;
  for (std::size_t j = 0; j < out.source_order.size(); ++j) {
    const NodeId s = out.source_order[j];
    const double xn = xc - (j + 0.5) * pitch, xs = xc + (j + 0.5) * pitch;
    const double ys = y_center(s);
    const bool east_of_channel = s % cols >= c_mid;
    const double port = east_of_channel ? x_left(s % cols) : x_left(s % cols) + wn;
    add(1, port, ys, has_north[s] ? xn : xs, ys, "trunk", s);
    double n_lo = ys, n_hi = ys, s_hi = ys;
    const std::size_t first = b;
    for (; b < branches.size() && branches[b].source == s; ++b) {
      const double y = lane_y(branches[b].row, branches[b].lane);
      if (branches[b].row <= s / cols) {
        n_lo = std::min(n_lo, y);
        n_hi = std::max(n_hi, y);
      } else {
        s_hi = std::max(s_hi, y);
      }
    }
    if (has_north[s]) add(1, xn, n_hi, xn, n_lo, "trunk", s);
    if (has_south[s]) add(1, xs, ys, xs, s_hi, "trunk", s);
    for (std::size_t i = first; i < b; ++i) {
      const Branch& br = branches[i];
      const double x_trunk = br.row <= s / cols ? xn : xs;
      const double y = lane_y(br.row, br.lane);
      double x_far = x_trunk;
      for (NodeId t : br.targets)
        x_far = br.west ? std::min(x_far, x_center(t)) : std::max(x_far, x_center(t));
      add(1, x_trunk, y, x_trunk, y, "coupler", s);
      add(0, x_trunk, y, x_far, y, "branch", s);
      const double neuron_bottom = row_top[br.row] + hn;
      for (NodeId t : br.targets) {
        const double xt = x_center(t);
        add(0, xt, y, xt, neuron_bottom, "tap", s);
        add(0, xt, neuron_bottom, xt, neuron_bottom, "coupler", s);
        const double half = p.l_spd * kMicron / 2.0;
        add(1, xt - half, neuron_bottom - 1.0, xt + half, neuron_bottom - 1.0, "spd", s);
      }
    }
  }
  return out;
}

std::string routing_svg(const RoutingLayout& layout, const PhysicalParams& p, std::optional<NodeId> highlight) {
  const double rb = p.r_bend * kMicron;
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(layout.width) + "\" height=\"" +
       num(layout.height) + "\" viewBox=\"0 0 " + num(layout.width) + " " + num(layout.height) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(layout.width) + "\" height=\"" + num(layout.height) +
       "\" fill=\"white\"/>\n";
  const double tri = std::max(rb, 1.0);
  for (const auto& box : layout.nodes)
    s += "<rect x=\"" + num(box.x) + "\" y=\"" + num(box.y) + "\" width=\"" + num(box.width) + "\" height=\"" +
         num(box.height) + "\" fill=\"#f2f2f2\" stroke=\"#7f7f7f\" stroke-width=\"0.5\"/>\n";
  for (const auto& seg : layout.segments) {
    const bool dim = highlight && seg.source != *highlight;
    std::string color;
    if (dim)
      color = "#d9d9d9";
    else if (seg.kind == "spd")
      color = "#000000";
    else if (seg.kind == "coupler")
      color = "#2ca02c";
    else
      color = seg.plane == 1 ? "#1f77b4" : "#d62728";
    if (seg.kind == "coupler") {
      // Pair of opposed triangles marking the plane transition.
      const double x = seg.x0, y = seg.y0;
      s += "<polygon points=\"" + num(x - tri) + "," + num(y - tri) + " " + num(x) + "," + num(y) + " " +
           num(x - tri) + "," + num(y + tri) + "\" fill=\"" + color + "\"/>\n";
      s += "<polygon points=\"" + num(x + tri) + "," + num(y - tri) + " " + num(x) + "," + num(y) + " " +
           num(x + tri) + "," + num(y + tri) + "\" fill=\"" + color + "\"/>\n";
      continue;
    }
    const char* width = seg.kind == "spd" ? "2" : "0.5";
    s += "<line x1=\"" + num(seg.x0) + "\" y1=\"" + num(seg.y0) + "\" x2=\"" + num(seg.x1) + "\" y2=\"" +
         num(seg.y1) + "\" stroke=\"" + color + "\" stroke-width=\"" + width + "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

std::string routing_csv(const RoutingLayout& layout) {
  std::string s = "plane,x0,y0,x1,y1,kind,source\n";
  for (const auto& seg : layout.segments) {
    s += std::to_string(seg.plane) + "," + num(seg.x0) + "," + num(seg.y0) + "," + num(seg.x1) + "," + num(seg.y1) +
         "," + seg.kind + "," + std::to_string(seg.source) + "\n";
  }
  return s;
}

}  // namespace soenet

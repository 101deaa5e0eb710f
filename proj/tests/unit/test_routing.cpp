#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "soenet/error.hpp"
#include "soenet/growth.hpp"
#include "soenet/layout.hpp"

using namespace soenet;

namespace {

SpatialGraph all_to_all(std::uint32_t side) {
  SpatialGraph g{HierarchySpec({{side, side}})};
  for (NodeId a = 0; a < g.n_nodes(); ++a)
    for (NodeId b = 0; b < g.n_nodes(); ++b)
      if (a != b) g.add_edge(a, b);
  return g;
}

std::map<std::string, int> kinds(const RoutingLayout& l, std::optional<NodeId> only = std::nullopt) {
  std::map<std::string, int> m;
  for (const auto& s : l.segments)
    if (!only || s.source == *only) ++m[s.kind];
  return m;
}

}  // namespace

TEST_CASE("single node sector has nothing to route") {
  const auto l = emit_routing_layout(SpatialGraph{HierarchySpec({{1, 1}})}, PhysicalParams{});
  CHECK(l.segments.empty());
  CHECK(l.nodes.size() == 1);
}

TEST_CASE("5x5 all-to-all segment counts") {
  const auto l = emit_routing_layout(all_to_all(5), PhysicalParams{});
  // Per source: an exit, a north trunk, and a south trunk unless the source
  // sits in the bottom row. Every row has targets both west and east of the
  // channel, giving ten branches; each branch and each target adds a coupler.
  const int sources = 25, bottom = 5, targets = 25 * 24;
  const auto m = kinds(l);
  CHECK(m.at("trunk") == sources * 3 - bottom);
  CHECK(m.at("branch") == sources * 10);
  CHECK(m.at("coupler") == sources * 10 + targets);
  CHECK(m.at("tap") == targets);
  CHECK(m.at("spd") == targets);
  CHECK(l.source_order.front() == 12);
}

TEST_CASE("single source topology") {
  const auto l = emit_routing_layout(all_to_all(5), PhysicalParams{});
  const NodeId centre = 12;
  int exits = 0, vertical = 0;
  std::set<double> branch_rows;
  for (const auto& s : l.segments) {
    if (s.source != centre) continue;
    if (s.kind == "trunk") (s.y0 == s.y1 ? exits : vertical)++;
    if (s.kind == "branch") branch_rows.insert(s.y0);
    if (s.kind == "trunk" && s.y0 == s.y1) CHECK(s.x1 < s.x0);  // the centre column is east of the channel, so it exits west
  }
  CHECK(exits == 1);
  CHECK(vertical == 2);
  CHECK(branch_rows.size() == 5);
  const auto m = kinds(l, centre);
  CHECK(m.at("branch") == 10);
  CHECK(m.at("tap") == 24);
}

TEST_CASE("sparse sectors route only present edges") {
  SpatialGraph g{HierarchySpec({{3, 3}})};
  g.add_edge(4, 0);
  g.add_edge(4, 8);
  const auto l = emit_routing_layout(g, PhysicalParams{});
  CHECK(l.source_order == std::vector<NodeId>{4});
  const auto m = kinds(l);
  CHECK(m.at("tap") == 2);
  CHECK(m.at("branch") == 2);
  CHECK(m.at("trunk") == 3);
}

TEST_CASE("routing output is deterministic") {
  GrowthParams gp;
  const auto sector = grow_sector({9, 9}, gp);
  const PhysicalParams p;
  const auto a = emit_routing_layout(sector, p), b = emit_routing_layout(sector, p);
  CHECK(routing_svg(a, p) == routing_svg(b, p));
  CHECK(routing_svg(a, p, 40) == routing_svg(b, p, 40));
  CHECK(routing_svg(a, p, 40) != routing_svg(a, p));
  const auto csv = routing_csv(a);
  CHECK(csv.rfind("plane,x0,y0,x1,y1,kind,source\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(a.segments.size() + 1));
  CHECK(routing_svg(a, p).find("<svg") != std::string::npos);
}

TEST_CASE("routing needs a single sector") {
  CHECK_THROWS_AS(emit_routing_layout(SpatialGraph{HierarchySpec({{2, 2}, {2, 2}})}, PhysicalParams{}),
                  InvalidArgument);
}

#include <filesystem>
#include <set>

#include "doctest.h"
#include "soenet/error.hpp"
#include "soenet/graph.hpp"
#include "soenet/graph_io.hpp"
#include "soenet/growth.hpp"

using namespace soenet;

namespace {

HierarchySpec paper_spec() { return HierarchySpec({{9, 9}, {5, 5}, {2, 2}}); }

SpatialGraph random_like(const HierarchySpec& spec, std::uint64_t m, std::uint64_t seed) {
  return generate_random(spec, m, seed);
}

}  // namespace

TEST_CASE("hierarchy layout of trivial grids") {
  auto one = positions_for_hierarchy(HierarchySpec({{1, 1}}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].position == GridPoint{0, 0});

  auto four = positions_for_hierarchy(HierarchySpec({{2, 2}}));
  REQUIRE(four.size() == 4);
  CHECK(four[0].position == GridPoint{0, 0});
  CHECK(four[1].position == GridPoint{1, 0});
  CHECK(four[2].position == GridPoint{0, 1});
  CHECK(four[3].position == GridPoint{1, 1});
}

TEST_CASE("paper hierarchy has 8100 distinct positions on a 90 by 90 grid") {
  const auto spec = paper_spec();
  CHECK(spec.n_nodes() == 8100);
  const auto placements = positions_for_hierarchy(spec);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::int64_t max_x = 0, max_y = 0;
  for (const auto& p : placements) {
    seen.insert({p.position.x, p.position.y});
    max_x = std::max(max_x, p.position.x);
    max_y = std::max(max_y, p.position.y);
  }
  CHECK(seen.size() == 8100);
  CHECK(max_x + 1 == 90);
  CHECK(max_y + 1 == 90);
  CHECK(spec.extent_cols(2) == 90);
  CHECK(spec.extent_rows(1) == 45);
}

TEST_CASE("addresses agree with positions") {
  const auto spec = paper_spec();
  const auto placements = positions_for_hierarchy(spec);
  for (NodeId v = 0; v < spec.n_nodes(); v += 7) {
    const auto& a = placements[v].address;
    REQUIRE(a.size() == 3);
    std::int64_t x = 0, y = 0, cw = 1, rh = 1;
    for (std::size_t l = 0; l < 3; ++l) {
      const auto g = spec.levels()[l];
      x += static_cast<std::int64_t>(a[l] % g.cols) * cw;
      y += static_cast<std::int64_t>(a[l] / g.cols) * rh;
      cw *= g.cols;
      rh *= g.rows;
    }
    CHECK(placements[v].position == GridPoint{x, y});
    CHECK(spec.position(v) == placements[v].position);
  }
}

TEST_CASE("zero-sized or empty hierarchy is rejected") {
  CHECK_THROWS_AS(HierarchySpec({{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(HierarchySpec({{3, 3}, {2, 0}}), InvalidArgument);
  CHECK_THROWS_AS(HierarchySpec(std::vector<GridDims>{}), InvalidArgument);
  CHECK_THROWS_AS(positions_for_hierarchy(HierarchySpec{}), InvalidArgument);
}

TEST_CASE("shared level and cell membership") {
  const auto spec = paper_spec();
  CHECK(spec.shared_level(0, 1) == 0);
  CHECK(spec.shared_level(0, 81) == 1);
  CHECK(spec.shared_level(0, 2025) == 2);
  CHECK(spec.cell_of(2024, 1) == 0);
  CHECK(spec.cell_of(2025, 1) == 1);
}

TEST_CASE("edges form a set without self-loops") {
  SpatialGraph g{HierarchySpec({{2, 2}})};
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(0, 1));
  CHECK(g.n_edges() == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(0, 4), InvalidArgument);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(1, 0));
}

TEST_CASE("degree sums and bilateral bound on generated graphs") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = random_like(HierarchySpec({{6, 6}, {2, 2}}), 1500, seed);
    const auto d = degree_summary(g);
    std::uint64_t sin = 0, sout = 0;
    for (std::size_t i = 0; i < g.n_nodes(); ++i) {
      sin += d.in[i];
      sout += d.out[i];
      CHECK(d.total[i] == d.in[i] + d.out[i]);
      CHECK(d.bilateral[i] <= std::min(d.in[i], d.out[i]));
    }
    CHECK(sin == g.n_edges());
    CHECK(sout == g.n_edges());
  }
}

TEST_CASE("histogram counts values") {
  const std::vector<std::uint32_t> v{0, 2, 2, 5};
  const auto h = histogram(v);
  REQUIRE(h.size() == 6);
  CHECK(h[0] == 1);
  CHECK(h[2] == 2);
  CHECK(h[5] == 1);
  CHECK(h[1] == 0);
}

TEST_CASE("tile_along_diagonal") {
  SUBCASE("identity for one copy") {
    SpatialGraph b{HierarchySpec({{1, 2}})};
    b.add_edge(0, 1);
    const auto t = tile_along_diagonal(b, 1);
    CHECK(t.n_nodes() == 2);
    CHECK(t.edges() == b.edges());
  }
  SUBCASE("block diagonal copies") {
    SpatialGraph b{HierarchySpec({{1, 2}})};
    b.add_edge(0, 1);
    const auto t = tile_along_diagonal(b, 3);
    CHECK(t.n_nodes() == 6);
    const std::vector<Edge> want{{0, 1}, {2, 3}, {4, 5}};
    CHECK(t.edges() == want);
    CHECK(t.hierarchy().depth() == 2);
  }
  SUBCASE("sector copies preserve every degree sequence") {
    GrowthParams p;
    p.seed = 11;
    const auto sector = grow_sector({9, 9}, p);
    const auto t = tile_along_diagonal(sector, 25);
    CHECK(t.n_nodes() == 2025);
    CHECK(t.n_edges() == 25 * sector.n_edges());
    for (std::uint32_t c = 0; c < 25; ++c)
      for (NodeId i = 0; i < 81; ++i) {
        CHECK(t.in_degree(c * 81 + i) == sector.in_degree(i));
        CHECK(t.out_degree(c * 81 + i) == sector.out_degree(i));
      }
  }
  SUBCASE("zero copies rejected") {
    SpatialGraph b{HierarchySpec({{1, 2}})};
    CHECK_THROWS_AS(tile_along_diagonal(b, 0), InvalidArgument);
  }
}

TEST_CASE("tile over a grid re-derives positions") {
  SpatialGraph b{HierarchySpec({{2, 2}})};
  b.add_edge(0, 3);
  const auto t = tile(b, {2, 3});
  CHECK(t.n_nodes() == 24);
  CHECK(t.hierarchy().levels().back() == GridDims{2, 3});
  CHECK(t.position(4) == GridPoint{2, 0});
  CHECK(t.has_edge(4, 7));
  CHECK_FALSE(t.has_edge(0, 7));
}

TEST_CASE("subgraph") {
  const auto spec = HierarchySpec({{3, 3}, {2, 2}});
  const auto g = random_like(spec, 200, 3);
  SUBCASE("whole top cell is the graph itself") { CHECK(subgraph(g, 1, 0) == g); }
  SUBCASE("edgeless graph keeps its node count") {
    SpatialGraph e{spec};
    const auto s = subgraph(e, 0, 2);
    CHECK(s.n_nodes() == 9);
    CHECK(s.n_edges() == 0);
  }
  SUBCASE("only internal edges survive") {
    const auto s = subgraph(g, 0, 1);
    std::size_t internal = 0;
    for (const auto& e : g.edges())
      if (e.src / 9 == 1 && e.dst / 9 == 1) ++internal;
    CHECK(s.n_edges() == internal);
    for (const auto& e : s.edges()) CHECK(g.has_edge(e.src + 9, e.dst + 9));
  }
  SUBCASE("out-of-range cell") {
    CHECK_THROWS_AS(subgraph(g, 0, 4), InvalidArgument);
    CHECK_THROWS_AS(subgraph(g, 2, 0), InvalidArgument);
  }
}

TEST_CASE("serialization round trip") {
  const auto spec = paper_spec();
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto g = random_like(spec, 20000, seed);
    const std::string js = graph_to_json(g);
    const auto back = graph_from_json(js);
    CHECK(back == g);
    CHECK(graph_to_json(back) == js);
    for (NodeId v = 0; v < g.n_nodes(); v += 97) CHECK(back.position(v) == g.position(v));
    const auto csv_back = graph_from_csv(graph_to_csv(g), spec);
    CHECK(csv_back == g);
  }
}

TEST_CASE("graph files on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "soenet_graph_io_test";
  std::filesystem::create_directories(dir);
  const auto g = random_like(HierarchySpec({{4, 4}, {2, 1}}), 100, 9);
  save_graph_json(dir / "g.json", g);
  save_graph_csv(dir / "g.csv", g);
  CHECK(load_graph(dir / "g.json") == g);
  CHECK(graph_from_csv(read_text_file(dir / "g.csv"), g.hierarchy()) == g);
  CHECK_THROWS_AS(load_graph(dir / "missing.json"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed graph documents") {
  CHECK_THROWS_AS(graph_from_json("{not json"), ParseError);
  CHECK_THROWS_AS(graph_from_json(R"({"n_nodes":5,"hierarchy":[[2,2]],"edges":[]})"), ParseError);
  CHECK_THROWS_AS(graph_from_json(R"({"n_nodes":4,"hierarchy":[[2,2]],"edges":[[0]]})"), ParseError);
  CHECK_THROWS_AS(graph_from_csv("a,b\n0,1\n", HierarchySpec({{2, 2}})), ParseError);
  CHECK_THROWS_AS(graph_from_csv("src,dst\n0;1\n", HierarchySpec({{2, 2}})), ParseError);
  CHECK_THROWS_AS(graph_from_csv("src,dst\n0,x\n", HierarchySpec({{2, 2}})), ParseError);
}

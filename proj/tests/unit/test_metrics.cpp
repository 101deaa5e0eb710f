#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "soenet/error.hpp"
#include "soenet/growth.hpp"
#include "soenet/metrics.hpp"
#include "soenet/report_io.hpp"
#include "json.hpp"

using namespace soenet;
using doctest::Approx;

namespace {

SpatialGraph line_graph(std::uint32_t n, std::initializer_list<Edge> edges) {
  SpatialGraph g{HierarchySpec({{1, n}})};
  for (const auto& e : edges) g.add_edge(e.src, e.dst);
  return g;
}

oracle::Matrix dense(const SpatialGraph& g) {
  auto m = oracle::zeros(g.n_nodes());
  for (const auto& e : g.edges()) m[e.src][e.dst] = 1;
  return m;
}

SpatialGraph random_small(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> size(1, 9);
  const std::uint32_t n = size(rng);
  std::uniform_real_distribution<double> u(0, 1);
  const double density = u(rng);
  SpatialGraph g{HierarchySpec({{1, n}})};
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = 0; b < n; ++b)
      if (a != b && u(rng) < density) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("clustering of hand-checked motifs") {
  const auto cycle = line_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  for (NodeId v = 0; v < 3; ++v) CHECK(clustering_coefficient(cycle, v) == Approx(0.5));
  const auto complete = line_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
  for (NodeId v = 0; v < 3; ++v) CHECK(clustering_coefficient(complete, v) == Approx(1.0));
  CHECK(mean_clustering(complete) == Approx(1.0));
  SpatialGraph edgeless{HierarchySpec({{3, 3}})};
  CHECK(mean_clustering(edgeless) == 0.0);
  CHECK_THROWS_AS(mean_clustering(SpatialGraph{}), InvalidArgument);
}

TEST_CASE("feed-forward bipartite layers have zero clustering") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(0.6);
    SpatialGraph g{HierarchySpec({{2, 8}})};
    for (NodeId a = 0; a < 8; ++a)
      for (NodeId b = 8; b < 16; ++b)
        if (keep(rng)) g.add_edge(a, b);
    CHECK(mean_clustering(g) == 0.0);
  }
}

TEST_CASE("clustering agrees with the dense matrix formula") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_small(rng);
    const auto want = oracle::clustering(dense(g));
    const auto got = clustering_coefficients(g);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == Approx(want[i]).epsilon(1e-12));
  }
}

TEST_CASE("clustering stays in [0, 1] on 100 generated graphs") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    SpatialGraph g;
    if (seed % 2) {
      GrowthParams p;
      p.seed = seed;
      g = generate_growth(HierarchySpec({{9, 9}, {2, 2}}), p);
    } else {
      g = generate_random(HierarchySpec({{9, 9}, {2, 2}}), 300 + 40 * seed, seed);
    }
    for (double c : clustering_coefficients(g)) {
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
    }
  }
}

TEST_CASE("path length of small graphs") {
  const auto cycle = line_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto s = average_path_length(cycle);
  CHECK(s.mean == Approx(1.5));
  CHECK(s.reachable_pairs == 6);
  CHECK(s.diameter == 2);

  for (std::uint32_t n : {2u, 5u, 70u}) {
    SpatialGraph k{HierarchySpec({{1, n}})};
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b = 0; b < n; ++b)
        if (a != b) k.add_edge(a, b);
    CHECK(average_path_length(k).mean == 1.0);
  }

  const auto chain = line_graph(3, {{0, 1}, {1, 2}});
  const auto c = average_path_length(chain);
  CHECK(c.reachable_pairs == 3);
  CHECK(c.unreachable_pairs == 3);
  CHECK(c.mean == Approx(4.0 / 3.0));

  CHECK_THROWS_AS(average_path_length(SpatialGraph{HierarchySpec({{1, 4}})}), UndefinedResult);
}

TEST_CASE("BFS matches Floyd-Warshall on 1000 small digraphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = random_small(rng);
    const auto fw = oracle::floyd_warshall(dense(g));
    double sum = 0;
    std::uint64_t pairs = 0;
    for (NodeId s = 0; s < g.n_nodes(); ++s) {
      const auto d = bfs_distances(g, s);
      for (NodeId t = 0; t < g.n_nodes(); ++t) {
        REQUIRE(d[t] == fw[s][t]);
        if (s != t && fw[s][t] > 0) {
          sum += fw[s][t];
          ++pairs;
        }
      }
    }
    if (pairs) {
      const auto stats = average_path_length(g, 1 + trial % 3);
      CHECK(stats.reachable_pairs == pairs);
      CHECK(stats.mean == Approx(sum / pairs).epsilon(1e-12));
    }
  }
}

TEST_CASE("path statistics ignore labels and thread count") {
  const auto g = generate_random(HierarchySpec({{9, 9}, {2, 2}}), 2000, 4);
  const auto base = average_path_length(g, 1);
  CHECK(average_path_length(g, 4).mean == base.mean);
  // Reverse the node labels.
  const auto n = static_cast<NodeId>(g.n_nodes());
  SpatialGraph r{g.hierarchy()};
  for (const auto& e : g.edges()) r.add_edge(n - 1 - e.src, n - 1 - e.dst);
  const auto rs = average_path_length(r, 2);
  CHECK(rs.mean == Approx(base.mean).epsilon(1e-14));
  CHECK(rs.reachable_pairs == base.reachable_pairs);
  CHECK(rs.diameter == base.diameter);
}

TEST_CASE("small-world index") {
  CHECK(small_world_index(0.005, 2.8, 0.005, 2.8) == Approx(1.0));
  CHECK(small_world_index(0.2, 3.0, 0.005, 2.8) == Approx((0.2 / 3.0) / (0.005 / 2.8)));
  CHECK_THROWS_AS(small_world_index(0.2, 3.0, 0.0, 2.8), UndefinedResult);
}

TEST_CASE("power-law fit recovers synthetic exponents") {
  for (double gamma : {1.5, 2.0, 2.5}) {
    std::vector<std::uint64_t> counts(101, 0);
    for (int k = 1; k <= 100; ++k) counts[k] = static_cast<std::uint64_t>(std::llround(1e12 * std::pow(k, -gamma)));
    const auto f = fit_power_law(counts);
    CHECK(f.gamma == Approx(gamma).epsilon(0.01));
    CHECK(f.k_lo == 1);
    CHECK(f.k_hi == 100);
    CHECK(f.rms_log_residual < 0.05);
  }
  std::vector<std::uint64_t> two(4, 0);
  two[1] = 5;
  two[3] = 2;
  CHECK_THROWS_AS(fit_power_law(two), FitFailure);
  CHECK_THROWS_AS(fit_power_law(std::vector<std::uint64_t>{}), FitFailure);
}

TEST_CASE("histogram mode") {
  const std::vector<std::uint64_t> h{9, 1, 4, 4, 2};
  CHECK(histogram_mode(h) == 2);
}

TEST_CASE("edge census") {
  SUBCASE("block diagonal tiling has only sector edges") {
    GrowthParams p;
    const auto t = tile(grow_sector({9, 9}, p), {2, 2});
    const auto c = hierarchy_edge_census(t);
    REQUIRE(c.size() == 2);
    CHECK(c[0] > 0.0);
    CHECK(c[1] == 0.0);
  }
  SUBCASE("brute-force classification and the sum identity") {
    const HierarchySpec spec({{3, 3}, {2, 2}, {1, 2}});
    const auto g = generate_random(spec, 900, 12);
    std::vector<double> want(3, 0.0);
    for (const auto& e : g.edges()) {
      // Recompute cells from the grid coordinates instead of ids.
      const auto a = g.position(e.src), b = g.position(e.dst);
      const bool same_sector = a.x / 3 == b.x / 3 && a.y / 3 == b.y / 3;
      const bool same_region = a.x / 6 == b.x / 6 && a.y / 6 == b.y / 6;
      want[same_sector ? 0 : same_region ? 1 : 2] += 1.0;
    }
    const auto got = hierarchy_edge_census(g);
    double total = 0;
    for (int l = 0; l < 3; ++l) {
      CHECK(got[l] == Approx(want[l] / g.n_nodes()));
      total += got[l];
    }
    CHECK(total == Approx(static_cast<double>(g.n_edges()) / g.n_nodes()));
  }
}

TEST_CASE("rent exponent") {
  SUBCASE("isolated sector copies give warnings and no exponent") {
    GrowthParams p;
    const auto t = tile(grow_sector({3, 3}, p), {1, 2});
    const auto r = rent_exponent(t);
    CHECK_FALSE(r.warnings.empty());
    CHECK(std::isnan(r.exponent));
  }
  SUBCASE("crossing counts of a two-sector toy graph") {
    SpatialGraph g{HierarchySpec({{1, 2}, {1, 2}})};
    g.add_edge(0, 2);
    g.add_edge(3, 1);
    g.add_edge(1, 3);
    g.add_edge(0, 1);
    const auto r = rent_exponent(g);
    REQUIRE(r.partitions.size() == 2);
    CHECK(r.partitions[0].crossing_edges == 3);
    CHECK(r.partitions[1].crossing_edges == 3);
    CHECK(r.partitions[0].nodes == 2);
    CHECK(r.partitions[0].exponent == Approx(std::log10(2.0) / std::log10(3.0)));
  }
  SUBCASE("random network exposes one row per partition") {
    const auto g = generate_random(HierarchySpec({{9, 9}, {5, 5}, {2, 2}}), 330430, 1);
    const auto r = rent_exponent(g);
    CHECK(r.partitions.size() == 100 + 4);
    CHECK(std::isfinite(r.exponent));
  }
  CHECK_THROWS_AS(rent_exponent(SpatialGraph{HierarchySpec({{2, 2}})}), InvalidArgument);
}

TEST_CASE("metrics report and its JSON form") {
  const auto g = generate_random(HierarchySpec({{9, 9}, {2, 2}}), 1500, 8);
  MetricsOptions o;
  o.paths = false;
  auto r = compute_metrics(g, o);
  CHECK(std::isnan(r.paths.mean));
  CHECK(r.n_edges == 1500);
  const auto d = degree_summary(g);
  auto j = nlohmann::json::parse(metrics_to_json(r, &d));
  CHECK(j["paths"]["mean"].is_null());
  CHECK(j["n_nodes"] == 324);
  CHECK(j["census"].size() == 2);
  CHECK(j.contains("histograms"));

  o.paths = true;
  r = compute_metrics(g, o);
  j = nlohmann::json::parse(metrics_to_json(r));
  CHECK(j["paths"]["mean"].get<double>() == Approx(average_path_length(g).mean));
  CHECK(j["clustering"].get<double>() == Approx(mean_clustering(g)));
  const auto s = degree_stats(d.total);
  CHECK(j["degrees"]["total"]["max"] == s.max);
}

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "soenet/error.hpp"
#include "soenet/scaling.hpp"

using namespace soenet;
using doctest::Approx;

TEST_CASE("degree-law normalization") {
  const double b = normalization(1.6, 10, 1e4);
  CHECK(b == Approx(0.6 / (std::pow(10.0, -0.6) - std::pow(1e4, -0.6))));
  CHECK(b == Approx(2.43).epsilon(0.005));
  const double mass = oracle::integrate([&](double k) { return b * std::pow(k, -1.6); }, 10, 1e4);
  CHECK(oracle::rel_err(mass, 1.0) < 1e-12);

  CHECK(normalization(2.0, 1, 1e12) == Approx(1.0).epsilon(1e-9));
  CHECK(normalization(1.0, 1, std::exp(2.0)) == Approx(0.5));
  CHECK_THROWS_AS(normalization(1.6, 10, 10), InvalidArgument);
  CHECK_THROWS_AS(normalization(1.6, 0.5, 10), InvalidArgument);
}

TEST_CASE("normalized density integrates to one for random parameters") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> g(1.05, 3.5), lk(0, 2), span(0.5, 5);
  for (int i = 0; i < 200; ++i) {
    const double gamma = g(rng), k_min = std::pow(10.0, lk(rng)), k_max = k_min * std::pow(10.0, span(rng));
    const double b = normalization(gamma, k_min, k_max);
    const double mass = oracle::integrate([&](double k) { return b * std::pow(k, -gamma); }, k_min, k_max);
    CHECK(oracle::rel_err(mass, 1.0) < 1e-12);
  }
}

TEST_CASE("maximum degree fixed point") {
  const double k6 = max_degree(1.6, 10, 1e6);
  CHECK(k6 == Approx(9.8e3).epsilon(0.02));
  CHECK(1e6 * normalization(1.6, 10, k6) * std::pow(k6, -1.6) == Approx(1.0).epsilon(1e-6));

  const double k2 = max_degree(2.0, 1, 1e4);
  CHECK(k2 == Approx(100).epsilon(0.01));
  CHECK(1e4 * normalization(2.0, 1, k2) * std::pow(k2, -2.0) == Approx(1.0).epsilon(1e-6));

  CHECK_THROWS_AS(max_degree(1.6, 10, 1.5), InvalidArgument);
}

TEST_CASE("maximum degree grows with network size and minimum degree") {
  for (double gamma : {1.3, 1.6, 2.0, 2.5}) {
    double prev = 0;
    for (double n = 1e3; n <= 1e9; n *= 3.7) {
      const double k = max_degree(gamma, 5, n);
      CHECK(k > prev);
      prev = k;
    }
    prev = 0;
    for (double k_min = 1; k_min <= 20; k_min += 1.5) {
      const double k = max_degree(gamma, k_min, 1e7);
      CHECK(k > prev);
      prev = k;
    }
  }
}

TEST_CASE("mean degree and total edges") {
  const DegreeLaw two{2.0, 1, 100};
  CHECK(mean_degree(two) == Approx(normalization(2.0, 1, 100) * std::log(100.0)));
  CHECK(mean_degree(two) == Approx(4.65).epsilon(0.002));
  CHECK(total_edges(two, 1e4) == Approx(1e4 * mean_degree(two)));

  const DegreeLaw thin{1.6, 10, 10 * (1 + 1e-9)};
  CHECK(mean_degree(thin) == Approx(10.0).epsilon(1e-8));

  for (double gamma : {1.3, 1.6, 2.0, 2.5}) {
    for (double n : {1e2, 1e5, 1e9}) {
      const auto law = degree_law_for_network(gamma, 10, n);
      const double b = normalization(gamma, law.k_min, law.k_max);
      const double want = oracle::integrate([&](double k) { return b * std::pow(k, 1 - gamma); }, law.k_min, law.k_max);
      CHECK(oracle::rel_err(mean_degree(law), want) < 1e-9);
      CHECK(oracle::rel_err(degree_moment(law, 1.0), want) < 1e-9);
    }
  }
  const DegreeLaw law{1.6, 10, 1e4};
  CHECK(degree_moment(law, 0.0) == Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(total_edges(law, 0), InvalidArgument);
}

TEST_CASE("degree sweep rows follow the fixed point") {
  const auto rows = degree_law_sweep({1.6, 2.0}, 10, {1e3, 1e6});
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r.k_max == Approx(max_degree(r.gamma, 10, r.n_tot)));
    CHECK(r.total_edges == Approx(r.n_tot * r.mean_degree));
  }
}

TEST_CASE("light-speed pool") {
  CHECK(pool_diameter(3e8, 1e6) == Approx(300));
  CHECK(pool_area(3e8, 1e6) == Approx(std::numbers::pi * 300 * 300 / 4));
  CHECK(pool_area(3e8, 1e6) == Approx(7.07e4).epsilon(0.001));
  CHECK(pool_area(3e8, 10) == Approx(7.07e14).epsilon(0.001));
  CHECK(pool_area(2e8, 1e6) / pool_area(3e8, 1e6) == Approx(4.0 / 9.0));
  const double c = pool_area(3e8, 1.0);
  for (double f = 1; f < 1e9; f *= 17) CHECK(pool_area(3e8, f) * f * f == Approx(c).epsilon(1e-14));
  CHECK_THROWS_AS(pool_diameter(3e8, 0), InvalidArgument);
}

TEST_CASE("pool count ratio") {
  const PoolParams soen{3e8, 1e6, 2.7e-4}, brain{2, 10, 2.4e-6};
  const double r = pool_count_ratio(soen, brain);
  CHECK(r == Approx(std::pow(3e8 * 2.4e-6 / (2.7e-4 * 2), 2)));
  CHECK(r == Approx(1.78e12).epsilon(0.002));
  CHECK(pool_count_ratio(soen, soen) == 1.0);
  PoolParams fast = soen;
  fast.velocity *= 2;
  CHECK(pool_count_ratio(fast, brain) == Approx(4 * r));
  CHECK_THROWS_AS(pool_count_ratio(PoolParams{0, 1, 1}, brain), InvalidArgument);
}

#include "soenet/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "soenet/error.hpp"

namespace soenet {

namespace {

struct WeightedNbr {
  NodeId node;
  std::uint32_t weight;  // entry of A + A^T: 1 or 2
};

// Rows of A + A^T, sorted by neighbor.
std::vector<std::vector<WeightedNbr>> symmetric_rows(const SpatialGraph& g) {
  std::vector<std::vector<WeightedNbr>> rows(g.n_nodes());
  for (NodeId i = 0; i < g.n_nodes(); ++i) {
    auto o = g.out(i), in = g.in(i);
    auto& r = rows[i];
    r.reserve(o.size() + in.size());
    auto a = o.begin(), b = in.begin();
    while (a != o.end() || b != in.end()) {
      if (b == in.end() || (a != o.end() && *a < *b)) r.push_back({*a++, 1});
      else if (a == o.end() || *b < *a) r.push_back({*b++, 1});
      else {
        r.push_back({*a, 2});
        ++a;
        ++b;
      }
    }
  }
  return rows;
}

double clustering_from_rows(const SpatialGraph& g, const std::vector<std::vector<WeightedNbr>>& rows,
                            NodeId i, std::vector<std::uint32_t>& mark) {
  const double d_tot = static_cast<double>(g.in_degree(i) + g.out_degree(i));
  double bilateral = 0;
  for (const auto& nb : rows[i]) bilateral += nb.weight == 2 ? 1 : 0;
  const double denom = 2.0 * (d_tot * (d_tot - 1.0) - 2.0 * bilateral);
  if (denom <= 0.0) return 0.0;
  for (const auto& nb : rows[i]) mark[nb.node] = nb.weight;
  std::uint64_t closed = 0;
  for (const auto& j : rows[i]) {
    std::uint64_t inner = 0;
    for (const auto& k : rows[j.node]) inner += std::uint64_t{k.weight} * mark[k.node];
    closed += j.weight * inner;
  }
  for (const auto& nb : rows[i]) mark[nb.node] = 0;
  return static_cast<double>(closed) / denom;
}

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i, 0u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) fn(i, t);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

double clustering_coefficient(const SpatialGraph& g, NodeId node) {
  if (node >= g.n_nodes()) throw InvalidArgument("clustering_coefficient: node out of range");
  const auto rows = symmetric_rows(g);
  std::vector<std::uint32_t> mark(g.n_nodes(), 0);
  return clustering_from_rows(g, rows, node, mark);
}

std::vector<double> clustering_coefficients(const SpatialGraph& g) {
  const auto rows = symmetric_rows(g);
  std::vector<std::uint32_t> mark(g.n_nodes(), 0);
  std::vector<double> c(g.n_nodes());
  for (NodeId i = 0; i < g.n_nodes(); ++i) c[i] = clustering_from_rows(g, rows, i, mark);
  return c;
}

double mean_clustering(const SpatialGraph& g) {
  if (g.n_nodes() == 0) throw InvalidArgument("mean_clustering: empty graph");
  const auto c = clustering_coefficients(g);
  return std::accumulate(c.begin(), c.end(), 0.0) / static_cast<double>(c.size());
}

std::vector<std::int32_t> bfs_distances(const SpatialGraph& g, NodeId src) {
  if (src >= g.n_nodes()) throw InvalidArgument("bfs_distances: node out of range");
  std::vector<std::int32_t> dist(g.n_nodes(), -1);
  std::vector<NodeId> queue{src};
  dist[src] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId v : g.out(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

PathStats average_path_length(const SpatialGraph& g, unsigned threads) {
  const std::size_t n = g.n_nodes();
  if (n < 2) throw InvalidArgument("average_path_length: need at least two nodes");
  const std::size_t batches = (n + 63) / 64;
  threads = resolve_threads(threads);

  struct Partial {
    std::uint64_t sum = 0, count = 0;
    std::uint32_t diameter = 0;
  };
  std::vector<Partial> partial(batches);
  struct Scratch {
    std::vector<std::uint64_t> visited, frontier, next;
  };
  std::vector<Scratch> scratch(threads);

  parallel_for(batches, threads, [&](std::size_t b, unsigned t) {
    auto& s = scratch[t];
    s.visited.assign(n, 0);
    s.frontier.assign(n, 0);
    s.next.assign(n, 0);
    const std::size_t lo = b * 64, hi = std::min(n, lo + 64);
    for (std::size_t src = lo; src < hi; ++src) {
      s.visited[src] = s.frontier[src] = std::uint64_t{1} << (src - lo);
    }
    Partial p;
    for (std::uint32_t depth = 1;; ++depth) {
      bool any = false;
      for (NodeId u = 0; u < n; ++u) {
        const auto f = s.frontier[u];
        if (!f) continue;
        for (NodeId v : g.out(u)) s.next[v] |= f;
      }
      std::uint64_t reached = 0;
      for (std::size_t v = 0; v < n; ++v) {
        const auto fresh = s.next[v] & ~s.visited[v];
        s.next[v] = 0;
        s.frontier[v] = fresh;
        if (fresh) {
          any = true;
          s.visited[v] |= fresh;
          reached += static_cast<std::uint64_t>(std::popcount(fresh));
        }
      }
      if (!any) break;
      p.sum += reached * depth;
      p.count += reached;
      p.diameter = depth;
    }
    partial[b] = p;
  });

  PathStats st;
  std::uint64_t sum = 0;
  for (const auto& p : partial) {
    sum += p.sum;
    st.reachable_pairs += p.count;
    st.diameter = std::max(st.diameter, p.diameter);
  }
  st.unreachable_pairs = static_cast<std::uint64_t>(n) * (n - 1) - st.reachable_pairs;
  if (st.reachable_pairs == 0) throw UndefinedResult("average_path_length: no reachable pairs");
  st.mean = static_cast<double>(sum) / static_cast<double>(st.reachable_pairs);
  return st;
}

double small_world_index(double clustering, double path_length, double baseline_clustering,
                         double baseline_path_length) {
  if (!(baseline_clustering > 0.0)) throw UndefinedResult("small_world_index: baseline clustering is zero");
  if (!(path_length > 0.0) || !(baseline_path_length > 0.0))
    throw UndefinedResult("small_world_index: path lengths must be positive");
  return (clustering / path_length) / (baseline_clustering / baseline_path_length);
}

std::uint32_t histogram_mode(std::span<const std::uint64_t> counts) {
  std::uint32_t best = 0;
  for (std::uint32_t k = 1; k < counts.size(); ++k)
    if (best == 0 ? counts[k] > 0 : counts[k] > counts[best]) best = k;
  return best;
}

PowerLawFit fit_power_law(std::span<const std::uint64_t> counts, const PowerLawFitOptions& opts) {
  std::uint32_t lo = opts.k_lo, hi = opts.k_hi;
  if (lo == 0) {
    lo = 1;
    while (lo < counts.size() && counts[lo] == 0) ++lo;
  }
  if (hi == 0 || hi >= counts.size()) hi = counts.empty() ? 0 : static_cast<std::uint32_t>(counts.size() - 1);
  while (hi > lo && counts[hi] == 0) --hi;
  if (lo == 0 || lo > hi || !(opts.bins_per_decade > 0.0)) throw FitFailure("fit_power_law: empty fit range");

  // Bin edges at lo * 10^(j / bins_per_decade) snapped to integers; each bin
  // holds at least one integer degree.
  std::vector<double> xs, ys;
  const double ratio = std::pow(10.0, 1.0 / opts.bins_per_decade);
  double edge = lo;
  std::uint32_t start = lo;
  while (start <= hi) {
    edge *= ratio;
    auto stop = static_cast<std::uint32_t>(std::ceil(edge - 1e-9));  // exclusive
    if (stop <= start) continue;
    stop = std::min<std::uint32_t>(stop, hi + 1);
    std::uint64_t total = 0;
    double logsum = 0.0;
    for (std::uint32_t k = start; k < stop; ++k) {
      total += counts[k];
      logsum += std::log10(static_cast<double>(k));
    }
    const double width = stop - start;
    if (total > 0) {
      xs.push_back(logsum / width);
      ys.push_back(std::log10(static_cast<double>(total) / width));
    }
    start = stop;
  }
  if (xs.size() < 3) throw FitFailure("fit_power_law: fewer than three nonzero bins");

  const double m = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / m;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 0.0) throw FitFailure("fit_power_law: degenerate abscissa");
  const double slope = sxy / sxx;
  PowerLawFit fit;
  fit.gamma = -slope;
  fit.amplitude = std::pow(10.0, my - slope * mx);
  fit.k_lo = lo;
  fit.k_hi = hi;
  fit.bins_used = xs.size();
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (my + slope * (xs[i] - mx));
    ss += r * r;
  }
  fit.rms_log_residual = std::sqrt(ss / m);

  double n_obs = 0, log_sum = 0;
  for (std::uint32_t k = lo; k <= hi; ++k) {
    if (!counts[k]) continue;
    n_obs += static_cast<double>(counts[k]);
    log_sum += static_cast<double>(counts[k]) * std::log(k / (lo - 0.5));
  }
  fit.mle_gamma = log_sum > 0 ? 1.0 + n_obs / log_sum : std::numeric_limits<double>::quiet_NaN();
  return fit;
}

std::vector<double> hierarchy_edge_census(const SpatialGraph& g) {
  const auto& spec = g.hierarchy();
  std::vector<double> counts(spec.depth(), 0.0);
  for (NodeId s = 0; s < g.n_nodes(); ++s)
    for (NodeId d : g.out(s)) counts[spec.shared_level(s, d)] += 1.0;
  if (g.n_nodes())
    for (auto& c : counts) c /= static_cast<double>(g.n_nodes());
  return counts;
}

RentAnalysis rent_exponent(const SpatialGraph& g) {
  const auto& spec = g.hierarchy();
  if (spec.depth() < 2) throw InvalidArgument("rent_exponent: need at least two hierarchy levels");
  RentAnalysis ra;
  std::vector<double> level_log_n, level_log_e;
  for (std::size_t level = 0; level + 1 < spec.depth(); ++level) {
    const auto cells = spec.n_cells(level);
    std::vector<std::uint64_t> crossing(cells, 0);
    for (NodeId s = 0; s < g.n_nodes(); ++s)
      for (NodeId d : g.out(s)) {
        const auto cs = spec.cell_of(s, level), cd = spec.cell_of(d, level);
        if (cs != cd) {
          ++crossing[cs];
          ++crossing[cd];
        }
      }
    double e_sum = 0;
    std::uint64_t used = 0;
    for (std::uint64_t c = 0; c < cells; ++c) {
      RentPartition p{level, c, spec.cell_size(level), crossing[c], std::numeric_limits<double>::quiet_NaN()};
      if (crossing[c] > 1) p.exponent = std::log10(static_cast<double>(p.nodes)) / std::log10(static_cast<double>(crossing[c]));
      ra.partitions.push_back(p);
      if (crossing[c] == 0) continue;
      e_sum += static_cast<double>(crossing[c]);
      ++used;
    }
    if (used < cells)
      ra.warnings.push_back("level " + std::to_string(level) + ": " + std::to_string(cells - used) +
                            " partition(s) without crossing edges excluded");
    if (used) {
      level_log_n.push_back(std::log10(static_cast<double>(spec.cell_size(level))));
      level_log_e.push_back(std::log10(e_sum / static_cast<double>(used)));
    }
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  ra.exponent = nan;
  ra.dimension_bound = nan;
  if (level_log_n.size() >= 2) {
    const double m = static_cast<double>(level_log_n.size());
    const double mx = std::accumulate(level_log_e.begin(), level_log_e.end(), 0.0) / m;
    const double my = std::accumulate(level_log_n.begin(), level_log_n.end(), 0.0) / m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < level_log_n.size(); ++i) {
      sxx += (level_log_e[i] - mx) * (level_log_e[i] - mx);
      sxy += (level_log_e[i] - mx) * (level_log_n[i] - my);
    }
    if (sxx > 0) {
      ra.exponent = sxy / sxx;
      ra.dimension_bound = ra.exponent >= 1.0 ? std::numeric_limits<double>::infinity() : 1.0 / (1.0 - ra.exponent);
    }
  } else {
    ra.warnings.push_back("fewer than two partition levels with crossing edges; no regression exponent");
  }
  return ra;
}

DegreeStats degree_stats(std::span<const std::uint32_t> degrees) {
  DegreeStats s;
  if (degrees.empty()) return s;
  s.min = *std::min_element(degrees.begin(), degrees.end());
  s.max = *std::max_element(degrees.begin(), degrees.end());
  s.mean = std::accumulate(degrees.begin(), degrees.end(), 0.0) / static_cast<double>(degrees.size());
  return s;
}

MetricsReport compute_metrics(const SpatialGraph& g, const MetricsOptions& opts) {
  MetricsReport r;
  r.n_nodes = g.n_nodes();
  r.n_edges = g.n_edges();
  r.mean_clustering = mean_clustering(g);
  r.paths.mean = std::numeric_limits<double>::quiet_NaN();
  if (opts.paths && g.n_edges() > 0) r.paths = average_path_length(g, opts.threads);
  const auto deg = degree_summary(g);
  r.in_degree = degree_stats(deg.in);
  r.out_degree = degree_stats(deg.out);
  r.total_degree = degree_stats(deg.total);
  if (opts.fits) {
    auto fit = [&](const std::vector<std::uint32_t>& d) -> std::optional<PowerLawFit> {
      const auto h = histogram(d);
      auto o = opts.fit;
      if (opts.fit_from_mode && o.k_lo == 0) o.k_lo = histogram_mode(h);
      try {
        return fit_power_law(h, o);
      } catch (const FitFailure&) {
        return std::nullopt;
      }
    };
    r.in_fit = fit(deg.in);
    r.out_fit = fit(deg.out);
  }
  r.census = hierarchy_edge_census(g);
  if (g.hierarchy().depth() >= 2) r.rent = rent_exponent(g);
  return r;
}

}  // namespace soenet

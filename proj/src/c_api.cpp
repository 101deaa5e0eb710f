#include "soenet/soenet.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "soenet/error.hpp"
#include "soenet/graph.hpp"
#include "soenet/graph_io.hpp"
#include "soenet/growth.hpp"
#include "soenet/layout.hpp"
#include "soenet/metrics.hpp"
#include "soenet/power.hpp"
#include "soenet/report_io.hpp"
#include "soenet/scaling.hpp"

struct soenet_graph {
  soenet::SpatialGraph g;
};

namespace {

thread_local std::string g_last_error;

template <class F>
soenet_status guarded(F&& f) {
  try {
    f();
    return SOENET_OK;
  } catch (const soenet::Error& e) {
    g_last_error = e.what();
    return static_cast<soenet_status>(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return SOENET_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SOENET_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SOENET_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown failure";
    return SOENET_INTERNAL_ERROR;
  }
}

template <class T>
void require(const T* ptr, const char* name) {
  if (!ptr) throw soenet::InvalidArgument(std::string(name) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

soenet::HierarchySpec to_spec(const soenet_grid* levels, size_t n) {
  if (!levels || n == 0) throw soenet::InvalidArgument("hierarchy must have at least one level");
  std::vector<soenet::GridDims> dims;
  for (size_t i = 0; i < n; ++i) dims.push_back({levels[i].rows, levels[i].cols});
  return soenet::HierarchySpec(std::move(dims));
}

soenet::GrowthParams to_growth(const soenet_growth_params* p) {
  soenet::GrowthParams g;
  if (!p) return g;
  g.p0_sector = p->p0_sector;
  g.p0_higher = p->p0_higher;
  g.alpha = p->alpha;
  g.beta = p->beta;
  g.delta = p->delta;
  g.lambda = p->lambda;
  g.n_min_chances = p->n_min_chances;
  g.xi = p->xi;
  if (p->n_win_count && !p->n_win_per_level) throw soenet::InvalidArgument("n_win_per_level is NULL");
  g.n_win_per_level.assign(p->n_win_per_level, p->n_win_per_level + p->n_win_count);
  g.l_min = p->l_min;
  g.seed = p->seed;
  g.reciprocal_higher = p->reciprocal_higher != 0;
  return g;
}

soenet::PhysicalParams to_physical(const soenet_physical_params* p) {
  soenet::PhysicalParams q;
  if (!p) return q;
  q.w_wg = p->w_wg;
  q.g_wg = p->g_wg;
  q.h_sine = p->h_sine;
  q.l_sine = p->l_sine;
  q.g_tap = p->g_tap;
  q.l_tap = p->l_tap;
  q.l_ipc = p->l_ipc;
  q.w_ipc = p->w_ipc;
  q.l_spd = p->l_spd;
  q.r_bend = p->r_bend;
  q.l_demux = p->l_demux;
  q.n_spd = p->n_spd;
  q.plane_pairs = p->plane_pairs;
  if (p->n_level_plane_pairs && !p->level_plane_pairs) throw soenet::InvalidArgument("level_plane_pairs is NULL");
  q.level_plane_pairs.assign(p->level_plane_pairs, p->level_plane_pairs + p->n_level_plane_pairs);
  q.nitride_long_haul = p->nitride_long_haul != 0;
  q.allow_nonlocal = p->allow_nonlocal != 0;
  return q;
}

soenet::PowerParams to_power(const soenet_power_params* p) {
  soenet::PowerParams q;
  if (!p) return q;
  q.planck_h = p->planck_h;
  q.nu = p->nu;
  q.eta = p->eta;
  q.zeta = p->zeta;
  q.chi = p->chi;
  q.n_fq = p->n_fq;
  q.i_c = p->i_c;
  q.phi0 = p->phi0;
  q.gamma = p->gamma;
  q.mu = p->mu;
  q.k_min = p->k_min;
  q.k_max = p->k_max;
  q.f_min = p->f_min;
  q.f_max = p->f_max;
  q.static_power = p->static_power;
  return q;
}

soenet::AreaLaw to_law(const soenet_area_law* l) {
  require(l, "area law");
  return {l->coefficient, l->exponent, l->plane_pairs, l->residual};
}

soenet_graph* wrap(soenet::SpatialGraph g) { return new soenet_graph{std::move(g)}; }

const uint32_t kDefaultWinners[] = {41, 51};

}  // namespace

extern "C" {

const char* soenet_last_error(void) { return g_last_error.c_str(); }
const char* soenet_version(void) { return "1.0.0"; }

const char* soenet_status_name(soenet_status status) {
  switch (status) {
    case SOENET_OK: return "ok";
    case SOENET_INVALID_ARGUMENT: return "invalid argument";
    case SOENET_UNDEFINED_RESULT: return "undefined result";
    case SOENET_FIT_FAILURE: return "fit failure";
    case SOENET_NUMERICAL_FAILURE: return "numerical failure";
    case SOENET_IO_ERROR: return "i/o error";
    case SOENET_PARSE_ERROR: return "parse error";
    case SOENET_DEPENDENCY_ERROR: return "dependency error";
    case SOENET_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void soenet_string_free(char* s) { std::free(s); }

soenet_status soenet_graph_create(const soenet_grid* levels, size_t n_levels, soenet_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(soenet::SpatialGraph(to_spec(levels, n_levels)));
  });
}

void soenet_graph_free(soenet_graph* g) { delete g; }

soenet_status soenet_graph_clone(const soenet_graph* g, soenet_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = wrap(g->g);
  });
}

soenet_status soenet_graph_add_edge(soenet_graph* g, uint32_t src, uint32_t dst, int* added) {
  return guarded([&] {
    require(g, "graph");
    const bool fresh = g->g.add_edge(src, dst);
    if (added) *added = fresh ? 1 : 0;
  });
}

uint64_t soenet_graph_n_nodes(const soenet_graph* g) { return g ? g->g.n_nodes() : 0; }
uint64_t soenet_graph_n_edges(const soenet_graph* g) { return g ? g->g.n_edges() : 0; }
size_t soenet_graph_depth(const soenet_graph* g) { return g ? g->g.hierarchy().depth() : 0; }

soenet_status soenet_graph_level(const soenet_graph* g, size_t level, soenet_grid* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto& levels = g->g.hierarchy().levels();
    if (level >= levels.size()) throw soenet::InvalidArgument("level index out of range");
    *out = {levels[level].rows, levels[level].cols};
  });
}

soenet_status soenet_graph_edges(const soenet_graph* g, uint32_t* src, uint32_t* dst, size_t capacity) {
  return guarded([&] {
    require(g, "graph");
    require(src, "src");
    require(dst, "dst");
    if (capacity < g->g.n_edges()) throw soenet::InvalidArgument("edge buffer too small");
    size_t i = 0;
    for (const auto& e : g->g.edges()) {
      src[i] = e.src;
      dst[i] = e.dst;
      ++i;
    }
  });
}

soenet_status soenet_graph_degrees(const soenet_graph* g, uint32_t* in, uint32_t* out, uint32_t* bilateral,
                                   size_t capacity) {
  return guarded([&] {
    require(g, "graph");
    if (capacity < g->g.n_nodes()) throw soenet::InvalidArgument("degree buffer too small");
    const auto d = soenet::degree_summary(g->g);
    for (size_t i = 0; i < d.in.size(); ++i) {
      if (in) in[i] = d.in[i];
      if (out) out[i] = d.out[i];
      if (bilateral) bilateral[i] = d.bilateral[i];
    }
  });
}

soenet_status soenet_graph_positions(const soenet_graph* g, int64_t* x, int64_t* y, size_t capacity) {
  return guarded([&] {
    require(g, "graph");
    require(x, "x");
    require(y, "y");
    if (capacity < g->g.n_nodes()) throw soenet::InvalidArgument("position buffer too small");
    for (soenet::NodeId i = 0; i < g->g.n_nodes(); ++i) {
      const auto p = g->g.position(i);
      x[i] = p.x;
      y[i] = p.y;
    }
  });
}

soenet_status soenet_graph_subgraph(const soenet_graph* g, size_t level, uint64_t cell, soenet_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = wrap(soenet::subgraph(g->g, level, cell));
  });
}

soenet_status soenet_graph_tile_diagonal(const soenet_graph* block, uint32_t copies, soenet_graph** out) {
  return guarded([&] {
    require(block, "block");
    require(out, "out");
    *out = wrap(soenet::tile_along_diagonal(block->g, copies));
  });
}

int soenet_graph_equal(const soenet_graph* a, const soenet_graph* b) {
  if (!a || !b) return a == b;
  return a->g == b->g ? 1 : 0;
}

soenet_status soenet_graph_to_json(const soenet_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(soenet::graph_to_json(g->g));
  });
}

soenet_status soenet_graph_to_csv(const soenet_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(soenet::graph_to_csv(g->g));
  });
}

soenet_status soenet_graph_from_json(const char* text, soenet_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(soenet::graph_from_json(text));
  });
}

soenet_status soenet_graph_from_csv(const char* text, const soenet_grid* levels, size_t n_levels,
                                    soenet_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(soenet::graph_from_csv(text, to_spec(levels, n_levels)));
  });
}

soenet_status soenet_graph_load(const char* path, const soenet_grid* levels, size_t n_levels, soenet_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    const std::string p(path);
    if (p.size() >= 4 && p.compare(p.size() - 4, 4, ".csv") == 0)
      *out = wrap(soenet::graph_from_csv(soenet::read_text_file(p), to_spec(levels, n_levels)));
    else
      *out = wrap(soenet::graph_from_json(soenet::read_text_file(p)));
  });
}

soenet_status soenet_graph_save(const soenet_graph* g, const char* path) {
  return guarded([&] {
    require(g, "graph");
    require(path, "path");
    const std::string p(path);
    if (p.size() >= 4 && p.compare(p.size() - 4, 4, ".csv") == 0)
      soenet::save_graph_csv(p, g->g);
    else
      soenet::save_graph_json(p, g->g);
  });
}

void soenet_growth_params_default(soenet_growth_params* p) {
  if (!p) return;
  const soenet::GrowthParams d;
  p->p0_sector = d.p0_sector;
  p->p0_higher = d.p0_higher;
  p->alpha = d.alpha;
  p->beta = d.beta;
  p->delta = d.delta;
  p->lambda = d.lambda;
  p->n_min_chances = d.n_min_chances;
  p->xi = d.xi;
  p->n_win_per_level = kDefaultWinners;
  p->n_win_count = 2;
  p->l_min = d.l_min;
  p->seed = d.seed;
  p->reciprocal_higher = d.reciprocal_higher ? 1 : 0;
}

soenet_status soenet_generate_growth(const soenet_grid* levels, size_t n_levels, const soenet_growth_params* p,
                                     soenet_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(soenet::generate_growth(to_spec(levels, n_levels), to_growth(p)));
  });
}

soenet_status soenet_generate_partial(const soenet_grid* levels, size_t n_levels, const soenet_growth_params* p,
                                      soenet_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(soenet::generate_partial_growth(to_spec(levels, n_levels), to_growth(p)));
  });
}

soenet_status soenet_generate_random(const soenet_grid* levels, size_t n_levels, uint64_t n_edges, uint64_t seed,
                                     soenet_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(soenet::generate_random(to_spec(levels, n_levels), n_edges, seed));
  });
}

soenet_status soenet_grow_sector(soenet_grid grid, const soenet_growth_params* p, soenet_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(soenet::grow_sector({grid.rows, grid.cols}, to_growth(p)));
  });
}

soenet_status soenet_effective_length(double length, double k_in, double k_in_max, const soenet_growth_params* p,
                                      double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::effective_length(length, k_in, k_in_max, to_growth(p));
  });
}

soenet_status soenet_connection_probability(double length, double k_in, double k_in_max,
                                            const soenet_growth_params* p, double p0, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::connection_probability(length, k_in, k_in_max, to_growth(p), p0);
  });
}

soenet_status soenet_chance_count(double k, double k_min, double k_max, double n_s, const soenet_growth_params* p,
                                  uint32_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::chance_count(k, k_min, k_max, n_s, to_growth(p));
  });
}

void soenet_metrics_options_default(soenet_metrics_options* o) {
  if (!o) return;
  const soenet::MetricsOptions d;
  o->paths = d.paths;
  o->fits = d.fits;
  o->threads = d.threads;
  o->fit_k_lo = d.fit.k_lo;
  o->fit_k_hi = d.fit.k_hi;
  o->bins_per_decade = d.fit.bins_per_decade;
  o->fit_from_mode = d.fit_from_mode;
}

soenet_status soenet_clustering(const soenet_graph* g, uint32_t node, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (node >= g->g.n_nodes()) throw soenet::InvalidArgument("node out of range");
    *out = soenet::clustering_coefficient(g->g, node);
  });
}

soenet_status soenet_mean_clustering(const soenet_graph* g, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = soenet::mean_clustering(g->g);
  });
}

soenet_status soenet_path_length(const soenet_graph* g, unsigned threads, soenet_path_stats* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto s = soenet::average_path_length(g->g, threads);
    *out = {s.mean, s.reachable_pairs, s.unreachable_pairs, s.diameter};
  });
}

soenet_status soenet_bfs(const soenet_graph* g, uint32_t src, int32_t* dist, size_t capacity) {
  return guarded([&] {
    require(g, "graph");
    require(dist, "dist");
    if (src >= g->g.n_nodes()) throw soenet::InvalidArgument("source out of range");
    if (capacity < g->g.n_nodes()) throw soenet::InvalidArgument("distance buffer too small");
    const auto d = soenet::bfs_distances(g->g, src);
    std::copy(d.begin(), d.end(), dist);
  });
}

soenet_status soenet_small_world_index(double clustering, double path_length, double baseline_clustering,
                                       double baseline_path_length, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::small_world_index(clustering, path_length, baseline_clustering, baseline_path_length);
  });
}

soenet_status soenet_fit_power_law(const uint64_t* counts, size_t n, uint32_t k_lo, uint32_t k_hi,
                                   double bins_per_decade, soenet_power_law_fit* out) {
  return guarded([&] {
    require(counts, "counts");
    require(out, "out");
    const auto f = soenet::fit_power_law({counts, n}, {k_lo, k_hi, bins_per_decade});
    *out = {f.amplitude, f.gamma, f.k_lo, f.k_hi, f.bins_used, f.rms_log_residual, f.mle_gamma};
  });
}

soenet_status soenet_edge_census(const soenet_graph* g, double* out, size_t capacity) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto c = soenet::hierarchy_edge_census(g->g);
    if (capacity < c.size()) throw soenet::InvalidArgument("census buffer too small");
    std::copy(c.begin(), c.end(), out);
  });
}

soenet_status soenet_rent_exponent(const soenet_graph* g, double* exponent, double* dimension_bound) {
  return guarded([&] {
    require(g, "graph");
    const auto r = soenet::rent_exponent(g->g);
    if (exponent) *exponent = r.exponent;
    if (dimension_bound) *dimension_bound = r.dimension_bound;
  });
}

soenet_status soenet_metrics_json(const soenet_graph* g, const soenet_metrics_options* o, const char* label,
                                  char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    soenet::MetricsOptions opts;
    if (o) {
      opts.paths = o->paths != 0;
      opts.fits = o->fits != 0;
      opts.threads = o->threads;
      opts.fit = {o->fit_k_lo, o->fit_k_hi, o->bins_per_decade};
      opts.fit_from_mode = o->fit_from_mode != 0;
    }
    auto report = soenet::compute_metrics(g->g, opts);
    if (label) report.label = label;
    const auto degrees = soenet::degree_summary(g->g);
    *out = dup_string(soenet::metrics_to_json(report, &degrees));
  });
}

soenet_status soenet_normalization(double gamma, double k_min, double k_max, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::normalization(gamma, k_min, k_max);
  });
}

soenet_status soenet_max_degree(double gamma, double k_min, double n_tot, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::max_degree(gamma, k_min, n_tot);
  });
}

soenet_status soenet_mean_degree(double gamma, double k_min, double k_max, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::mean_degree({gamma, k_min, k_max});
  });
}

soenet_status soenet_total_edges(double gamma, double k_min, double k_max, double n_tot, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::total_edges({gamma, k_min, k_max}, n_tot);
  });
}

soenet_status soenet_pool_diameter(double velocity, double frequency, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::pool_diameter(velocity, frequency);
  });
}

soenet_status soenet_pool_area(double velocity, double frequency, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::pool_area(velocity, frequency);
  });
}

soenet_status soenet_pool_count_ratio(double velocity_a, double width_a, double velocity_b, double width_b,
                                      double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::pool_count_ratio({velocity_a, 1.0, width_a}, {velocity_b, 1.0, width_b});
  });
}

void soenet_physical_params_default(soenet_physical_params* p) {
  if (!p) return;
  const soenet::PhysicalParams d;
  p->w_wg = d.w_wg;
  p->g_wg = d.g_wg;
  p->h_sine = d.h_sine;
  p->l_sine = d.l_sine;
  p->g_tap = d.g_tap;
  p->l_tap = d.l_tap;
  p->l_ipc = d.l_ipc;
  p->w_ipc = d.w_ipc;
  p->l_spd = d.l_spd;
  p->r_bend = d.r_bend;
  p->l_demux = d.l_demux;
  p->n_spd = d.n_spd;
  p->plane_pairs = d.plane_pairs;
  p->level_plane_pairs = nullptr;
  p->n_level_plane_pairs = 0;
  p->nitride_long_haul = 0;
  p->allow_nonlocal = 0;
}

soenet_status soenet_tap_pitch(const soenet_physical_params* p, double* out) {
  return guarded([&] {
    require(out, "out");
    const auto q = to_physical(p);
    q.validate();
    *out = soenet::tap_pitch(q);
  });
}

soenet_status soenet_column_width(uint64_t n_row, const soenet_physical_params* p, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::column_width(n_row, to_physical(p));
  });
}

soenet_status soenet_row_height(uint64_t n_nodes, const soenet_physical_params* p, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::row_height(n_nodes, to_physical(p));
  });
}

soenet_status soenet_neuron_footprint(double k_in, const soenet_physical_params* p, double* height, double* width) {
  return guarded([&] {
    const auto f = soenet::neuron_footprint(k_in, to_physical(p));
    if (height) *height = f.height;
    if (width) *width = f.width;
  });
}

soenet_status soenet_network_area(const soenet_graph* g, const soenet_physical_params* p, soenet_area_summary* out,
                                  double* node_area, double* node_degree, size_t capacity) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if ((node_area || node_degree) && capacity < g->g.n_nodes())
      throw soenet::InvalidArgument("per-node buffer too small");
    if (g->g.hierarchy().depth() > SOENET_MAX_LEVELS) throw soenet::InvalidArgument("too many hierarchy levels");
    const auto r = soenet::network_area_exact(g->g, to_physical(p));
    *out = {};
    out->total_area = r.total_area;
    out->footprint_area = r.footprint_area;
    out->levels = r.level_routing_area.size();
    for (size_t l = 0; l < out->levels; ++l) {
      out->level_routing_area[l] = r.level_routing_area[l];
      out->level_plane_pairs[l] = r.level_plane_pairs[l];
    }
    out->has_fit = r.fit_exponent.has_value();
    out->fit_exponent = r.fit_exponent.value_or(0.0);
    out->fit_coefficient = r.fit_coefficient.value_or(0.0);
    if (node_area) std::copy(r.node_area.begin(), r.node_area.end(), node_area);
    if (node_degree) std::copy(r.node_degree.begin(), r.node_degree.end(), node_degree);
  });
}

soenet_status soenet_area_fit(const double* areas, const double* degrees, size_t n, uint32_t plane_pairs,
                              soenet_area_law* out) {
  return guarded([&] {
    require(areas, "areas");
    require(degrees, "degrees");
    require(out, "out");
    const auto l = soenet::area_fit({areas, areas + n}, {degrees, degrees + n}, plane_pairs);
    *out = {l.coefficient, l.exponent, l.plane_pairs, l.residual};
  });
}

soenet_status soenet_network_area_scaling(double n_tot, double gamma, double k_min, double k_max,
                                          const soenet_area_law* fit, uint32_t plane_pairs, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::network_area_scaling(n_tot, {gamma, k_min, k_max}, to_law(fit), plane_pairs);
  });
}

soenet_status soenet_network_area_delta(double n_tot, double k0, const soenet_area_law* fit, uint32_t plane_pairs,
                                        double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::network_area_delta(n_tot, k0, to_law(fit), plane_pairs);
  });
}

soenet_status soenet_scaling_capacity(double area, double gamma, double k_min, const soenet_area_law* fit,
                                      uint32_t plane_pairs, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::scaling_capacity(area, gamma, k_min, to_law(fit), plane_pairs);
  });
}

soenet_status soenet_delta_degree_capacity(double k0, double area, const soenet_area_law* fit, uint32_t plane_pairs,
                                           double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::delta_degree_capacity(k0, area, to_law(fit), plane_pairs);
  });
}

soenet_status soenet_routing_layout(const soenet_graph* sector, const soenet_physical_params* p, int64_t highlight,
                                    char** svg, char** csv, size_t* n_segments) {
  return guarded([&] {
    require(sector, "sector");
    const auto q = to_physical(p);
    const auto layout = soenet::emit_routing_layout(sector->g, q);
    std::optional<soenet::NodeId> h;
    if (highlight >= 0) {
      if (static_cast<uint64_t>(highlight) >= sector->g.n_nodes()) throw soenet::InvalidArgument("highlight node out of range");
      h = static_cast<soenet::NodeId>(highlight);
    }
    char* s = svg ? dup_string(soenet::routing_svg(layout, q, h)) : nullptr;
    char* c = nullptr;
    try {
      if (csv) c = dup_string(soenet::routing_csv(layout));
    } catch (...) {
      std::free(s);
      throw;
    }
    if (svg) *svg = s;
    if (csv) *csv = c;
    if (n_segments) *n_segments = layout.segments.size();
  });
}

soenet_status soenet_feedforward(uint64_t neurons_per_layer, const soenet_physical_params* p, double loss_db_per_m,
                                 soenet_feedforward_report* out) {
  return guarded([&] {
    require(out, "out");
    const auto r = soenet::feedforward_metrics(neurons_per_layer, to_physical(p), loss_db_per_m);
    *out = {r.layer_width, r.layer_height, r.max_distance, r.loss_db};
  });
}

double soenet_die_area(void) { return soenet::kDieArea; }
double soenet_wafer_area(void) { return soenet::kWaferArea; }

void soenet_power_params_default(soenet_power_params* p) {
  if (!p) return;
  const soenet::PowerParams d;
  *p = {d.planck_h, d.nu, d.eta, d.zeta, d.chi, d.n_fq, d.i_c, d.phi0, d.gamma, d.mu,
        d.k_min, d.k_max, d.f_min, d.f_max, d.static_power};
}

soenet_status soenet_energy(double k, const soenet_power_params* p, soenet_firing_energy* out) {
  return guarded([&] {
    require(out, "out");
    const auto q = to_power(p);
    q.validate();
    const auto e = soenet::firing_energy(k, q);
    *out = {e.photonic, e.fluxonic, e.total};
  });
}

soenet_status soenet_frequency_normalization(double mu, double f_min, double f_max, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::frequency_normalization(mu, f_min, f_max);
  });
}

soenet_status soenet_network_power(double n_tot, const soenet_power_params* p, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::network_power(n_tot, to_power(p));
  });
}

soenet_status soenet_network_power_quadrature(double n_tot, const soenet_power_params* p, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::network_power_quadrature(n_tot, to_power(p));
  });
}

soenet_status soenet_total_power(double n_tot, const soenet_power_params* p, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::total_power(n_tot, to_power(p));
  });
}

soenet_status soenet_power_density(double power, double area, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = soenet::power_density(power, area);
  });
}

soenet_status soenet_scaling_exponents(double gamma, double area_exponent, double* power_exponent,
                                       double* area_exponent_out) {
  return guarded([&] {
    const auto e = soenet::scaling_exponents(gamma, area_exponent);
    if (power_exponent) *power_exponent = e.power;
    if (area_exponent_out) *area_exponent_out = e.area;
  });
}

soenet_status soenet_spectral_density(double mu, double* exponent, int* one_over_f) {
  return guarded([&] {
    const auto s = soenet::spectral_density(mu);
    if (exponent) *exponent = s.exponent;
    if (one_over_f) *one_over_f = s.one_over_f ? 1 : 0;
  });
}

}  // extern "C"

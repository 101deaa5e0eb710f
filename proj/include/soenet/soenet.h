/*
 * C interface to the soenet library.
 *
 * Every fallible call returns a soenet_status. On failure the message for the
 * calling thread is available from soenet_last_error() until the next failing
 * call on that thread. Objects are opaque handles released with the matching
 * *_free function. Strings handed out by the library are released with
 * soenet_string_free. Lengths are SI units (m, m^2, W, J, Hz).
 */
#ifndef SOENET_H
#define SOENET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SOENET_API __declspec(dllexport)
#else
#define SOENET_API __attribute__((visibility("default")))
#endif

typedef enum soenet_status {
  SOENET_OK = 0,
  SOENET_INVALID_ARGUMENT = 1,
  SOENET_UNDEFINED_RESULT = 2,
  SOENET_FIT_FAILURE = 3,
  SOENET_NUMERICAL_FAILURE = 4,
  SOENET_IO_ERROR = 5,
  SOENET_PARSE_ERROR = 6,
  SOENET_DEPENDENCY_ERROR = 7,
  SOENET_INTERNAL_ERROR = 100
} soenet_status;

SOENET_API const char* soenet_last_error(void);
SOENET_API const char* soenet_version(void);
SOENET_API const char* soenet_status_name(soenet_status status);
SOENET_API void soenet_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

typedef struct soenet_graph soenet_graph;

typedef struct soenet_grid {
  uint32_t rows;
  uint32_t cols;
} soenet_grid;

SOENET_API soenet_status soenet_graph_create(const soenet_grid* levels, size_t n_levels, soenet_graph** out);
SOENET_API void soenet_graph_free(soenet_graph* g);
SOENET_API soenet_status soenet_graph_clone(const soenet_graph* g, soenet_graph** out);
/* *added is set to 1 for a new edge and 0 for a repeat; may be NULL. */
SOENET_API soenet_status soenet_graph_add_edge(soenet_graph* g, uint32_t src, uint32_t dst, int* added);
SOENET_API uint64_t soenet_graph_n_nodes(const soenet_graph* g);
SOENET_API uint64_t soenet_graph_n_edges(const soenet_graph* g);
SOENET_API size_t soenet_graph_depth(const soenet_graph* g);
SOENET_API soenet_status soenet_graph_level(const soenet_graph* g, size_t level, soenet_grid* out);
/* Edges sorted by (src, dst); capacity must be at least n_edges. */
SOENET_API soenet_status soenet_graph_edges(const soenet_graph* g, uint32_t* src, uint32_t* dst, size_t capacity);
/* Per-node degrees; any output pointer may be NULL. capacity >= n_nodes. */
SOENET_API soenet_status soenet_graph_degrees(const soenet_graph* g, uint32_t* in, uint32_t* out, uint32_t* bilateral,
                                              size_t capacity);
/* Grid coordinates of every node; capacity >= n_nodes. */
SOENET_API soenet_status soenet_graph_positions(const soenet_graph* g, int64_t* x, int64_t* y, size_t capacity);
SOENET_API soenet_status soenet_graph_subgraph(const soenet_graph* g, size_t level, uint64_t cell, soenet_graph** out);
SOENET_API soenet_status soenet_graph_tile_diagonal(const soenet_graph* block, uint32_t copies, soenet_graph** out);
SOENET_API int soenet_graph_equal(const soenet_graph* a, const soenet_graph* b);

SOENET_API soenet_status soenet_graph_to_json(const soenet_graph* g, char** out);
SOENET_API soenet_status soenet_graph_to_csv(const soenet_graph* g, char** out);
SOENET_API soenet_status soenet_graph_from_json(const char* text, soenet_graph** out);
/* CSV edge lists carry no hierarchy, so one must be supplied. */
SOENET_API soenet_status soenet_graph_from_csv(const char* text, const soenet_grid* levels, size_t n_levels,
                                               soenet_graph** out);
/* JSON unless the path ends in ".csv", which then needs levels. */
SOENET_API soenet_status soenet_graph_load(const char* path, const soenet_grid* levels, size_t n_levels,
                                           soenet_graph** out);
SOENET_API soenet_status soenet_graph_save(const soenet_graph* g, const char* path);

/* ---- generators -------------------------------------------------------- */

typedef struct soenet_growth_params {
  double p0_sector;
  double p0_higher;
  double alpha;
  double beta;
  double delta;
  double lambda;
  uint32_t n_min_chances;
  double xi;
  const uint32_t* n_win_per_level; /* one entry per level above the sector */
  size_t n_win_count;
  double l_min;
  uint64_t seed;
  int reciprocal_higher;
} soenet_growth_params;

/* Fills in the published defaults; n_win_per_level points at static storage. */
SOENET_API void soenet_growth_params_default(soenet_growth_params* p);

SOENET_API soenet_status soenet_generate_growth(const soenet_grid* levels, size_t n_levels,
                                                const soenet_growth_params* p, soenet_graph** out);
SOENET_API soenet_status soenet_generate_partial(const soenet_grid* levels, size_t n_levels,
                                                 const soenet_growth_params* p, soenet_graph** out);
SOENET_API soenet_status soenet_generate_random(const soenet_grid* levels, size_t n_levels, uint64_t n_edges,
                                                uint64_t seed, soenet_graph** out);
SOENET_API soenet_status soenet_grow_sector(soenet_grid grid, const soenet_growth_params* p, soenet_graph** out);

SOENET_API soenet_status soenet_effective_length(double length, double k_in, double k_in_max,
                                                 const soenet_growth_params* p, double* out);
SOENET_API soenet_status soenet_connection_probability(double length, double k_in, double k_in_max,
                                                       const soenet_growth_params* p, double p0, double* out);
SOENET_API soenet_status soenet_chance_count(double k, double k_min, double k_max, double n_s,
                                             const soenet_growth_params* p, uint32_t* out);

/* ---- metrics ----------------------------------------------------------- */

typedef struct soenet_path_stats {
  double mean;
  uint64_t reachable_pairs;
  uint64_t unreachable_pairs;
  uint32_t diameter;
} soenet_path_stats;

typedef struct soenet_power_law_fit {
  double amplitude;
  double gamma;
  uint32_t k_lo;
  uint32_t k_hi;
  size_t bins_used;
  double rms_log_residual;
  double mle_gamma;
} soenet_power_law_fit;

typedef struct soenet_metrics_options {
  int paths;
  int fits;
  unsigned threads; /* 0 = hardware concurrency */
  uint32_t fit_k_lo;
  uint32_t fit_k_hi;
  double bins_per_decade;
  int fit_from_mode;
} soenet_metrics_options;

SOENET_API void soenet_metrics_options_default(soenet_metrics_options* o);
SOENET_API soenet_status soenet_clustering(const soenet_graph* g, uint32_t node, double* out);
SOENET_API soenet_status soenet_mean_clustering(const soenet_graph* g, double* out);
SOENET_API soenet_status soenet_path_length(const soenet_graph* g, unsigned threads, soenet_path_stats* out);
/* dist must hold n_nodes entries; unreachable nodes get -1. */
SOENET_API soenet_status soenet_bfs(const soenet_graph* g, uint32_t src, int32_t* dist, size_t capacity);
SOENET_API soenet_status soenet_small_world_index(double clustering, double path_length, double baseline_clustering,
                                                  double baseline_path_length, double* out);
SOENET_API soenet_status soenet_fit_power_law(const uint64_t* counts, size_t n, uint32_t k_lo, uint32_t k_hi,
                                              double bins_per_decade, soenet_power_law_fit* out);
/* out needs depth entries. */
SOENET_API soenet_status soenet_edge_census(const soenet_graph* g, double* out, size_t capacity);
SOENET_API soenet_status soenet_rent_exponent(const soenet_graph* g, double* exponent, double* dimension_bound);
/* Full report as a JSON document. */
SOENET_API soenet_status soenet_metrics_json(const soenet_graph* g, const soenet_metrics_options* o, const char* label,
                                             char** out);

/* ---- scaling laws ------------------------------------------------------ */

SOENET_API soenet_status soenet_normalization(double gamma, double k_min, double k_max, double* out);
SOENET_API soenet_status soenet_max_degree(double gamma, double k_min, double n_tot, double* out);
SOENET_API soenet_status soenet_mean_degree(double gamma, double k_min, double k_max, double* out);
SOENET_API soenet_status soenet_total_edges(double gamma, double k_min, double k_max, double n_tot, double* out);
SOENET_API soenet_status soenet_pool_diameter(double velocity, double frequency, double* out);
SOENET_API soenet_status soenet_pool_area(double velocity, double frequency, double* out);
SOENET_API soenet_status soenet_pool_count_ratio(double velocity_a, double width_a, double velocity_b, double width_b,
                                                 double* out);

/* ---- physical layout --------------------------------------------------- */

typedef struct soenet_physical_params {
  double w_wg, g_wg, h_sine, l_sine, g_tap, l_tap, l_ipc, w_ipc, l_spd, r_bend, l_demux;
  uint32_t n_spd;
  uint32_t plane_pairs;
  const uint32_t* level_plane_pairs; /* optional, one per hierarchy level */
  size_t n_level_plane_pairs;
  int nitride_long_haul;
  int allow_nonlocal;
} soenet_physical_params;

#define SOENET_MAX_LEVELS 16

typedef struct soenet_area_summary {
  double total_area;
  double footprint_area;
  size_t levels;
  double level_routing_area[SOENET_MAX_LEVELS];
  uint32_t level_plane_pairs[SOENET_MAX_LEVELS];
  int has_fit;
  double fit_exponent;
  double fit_coefficient;
} soenet_area_summary;

typedef struct soenet_area_law {
  double coefficient;
  double exponent;
  uint32_t plane_pairs;
  double residual;
} soenet_area_law;

typedef struct soenet_feedforward_report {
  double layer_width;
  double layer_height;
  double max_distance;
  double loss_db;
} soenet_feedforward_report;

SOENET_API void soenet_physical_params_default(soenet_physical_params* p);
SOENET_API soenet_status soenet_tap_pitch(const soenet_physical_params* p, double* out);
SOENET_API soenet_status soenet_column_width(uint64_t n_row, const soenet_physical_params* p, double* out);
SOENET_API soenet_status soenet_row_height(uint64_t n_nodes, const soenet_physical_params* p, double* out);
SOENET_API soenet_status soenet_neuron_footprint(double k_in, const soenet_physical_params* p, double* height,
                                                 double* width);
/* node_area and node_degree are optional (NULL) and need n_nodes entries. */
SOENET_API soenet_status soenet_network_area(const soenet_graph* g, const soenet_physical_params* p,
                                             soenet_area_summary* out, double* node_area, double* node_degree,
                                             size_t capacity);
SOENET_API soenet_status soenet_area_fit(const double* areas, const double* degrees, size_t n, uint32_t plane_pairs,
                                         soenet_area_law* out);
SOENET_API soenet_status soenet_network_area_scaling(double n_tot, double gamma, double k_min, double k_max,
                                                     const soenet_area_law* fit, uint32_t plane_pairs, double* out);
SOENET_API soenet_status soenet_network_area_delta(double n_tot, double k0, const soenet_area_law* fit,
                                                   uint32_t plane_pairs, double* out);
SOENET_API soenet_status soenet_scaling_capacity(double area, double gamma, double k_min, const soenet_area_law* fit,
                                                 uint32_t plane_pairs, double* out);
SOENET_API soenet_status soenet_delta_degree_capacity(double k0, double area, const soenet_area_law* fit,
                                                      uint32_t plane_pairs, double* out);
/* highlight < 0 draws every source in color. svg and csv may be NULL. The
 * third output reports the segment count. */
SOENET_API soenet_status soenet_routing_layout(const soenet_graph* sector, const soenet_physical_params* p,
                                               int64_t highlight, char** svg, char** csv, size_t* n_segments);
SOENET_API soenet_status soenet_feedforward(uint64_t neurons_per_layer, const soenet_physical_params* p,
                                            double loss_db_per_m, soenet_feedforward_report* out);
SOENET_API double soenet_die_area(void);
SOENET_API double soenet_wafer_area(void);

/* ---- power ------------------------------------------------------------- */

typedef struct soenet_power_params {
  double planck_h, nu, eta, zeta, chi, n_fq, i_c, phi0;
  double gamma, mu;
  double k_min, k_max;
  double f_min, f_max;
  double static_power;
} soenet_power_params;

typedef struct soenet_firing_energy {
  double photonic;
  double fluxonic;
  double total;
} soenet_firing_energy;

SOENET_API void soenet_power_params_default(soenet_power_params* p);
SOENET_API soenet_status soenet_energy(double k, const soenet_power_params* p, soenet_firing_energy* out);
SOENET_API soenet_status soenet_frequency_normalization(double mu, double f_min, double f_max, double* out);
SOENET_API soenet_status soenet_network_power(double n_tot, const soenet_power_params* p, double* out);
SOENET_API soenet_status soenet_network_power_quadrature(double n_tot, const soenet_power_params* p, double* out);
SOENET_API soenet_status soenet_total_power(double n_tot, const soenet_power_params* p, double* out);
SOENET_API soenet_status soenet_power_density(double power, double area, double* out);
SOENET_API soenet_status soenet_scaling_exponents(double gamma, double area_exponent, double* power_exponent,
                                                  double* area_exponent_out);
SOENET_API soenet_status soenet_spectral_density(double mu, double* exponent, int* one_over_f);

#ifdef __cplusplus
}
#endif

#endif /* SOENET_H */

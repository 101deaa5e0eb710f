#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

#include "api.hpp"
#include "json.hpp"
#include "output.hpp"

namespace cli {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void say(const Options& o, const std::string& msg) {
  if (!o.quiet) std::cerr << msg << '\n';
}

template <class F>
void parallel_for(size_t n, F fn) {
  const size_t workers = std::min<size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto work = [&] {
    for (size_t i; (i = next++) < n;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Paths inside reports are relative to the output root so digests do not
/// depend on where the run was placed.
std::string display_path(const fs::path& root, const fs::path& p) {
  std::error_code ec;
  const auto rel = fs::relative(p, root, ec);
  if (!ec && !rel.empty() && *rel.begin() != "..") return rel.generic_string();
  return p.generic_string();
}

double jnum(const json& v) { return v.is_number() ? v.get<double>() : std::nan(""); }
json jout(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

struct MeanSd {
  double mean = std::nan("");
  double sd = std::nan("");
};

MeanSd mean_sd(const std::vector<double>& xs) {
  std::vector<double> v;
  for (double x : xs)
    if (std::isfinite(x)) v.push_back(x);
  MeanSd r;
  if (v.empty()) return r;
  r.mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  double ss = 0.0;
  for (double x : v) ss += (x - r.mean) * (x - r.mean);
  r.sd = v.size() > 1 ? std::sqrt(ss / (v.size() - 1)) : 0.0;
  return r;
}

std::string stem_for(const std::string& generator, uint64_t seed) {
  return generator + "_seed" + std::to_string(seed);
}

Graph load_graph(const fs::path& path, const RunConfig& c) {
  if (!fs::exists(path)) throw Failure(SOENET_IO_ERROR, "graph file '" + path.string() + "' does not exist");
  soenet_graph* g = nullptr;
  check(soenet_graph_load(path.c_str(), c.hierarchy.data(), c.hierarchy.size(), &g), "loading '" + path.string() + "'");
  return adopt(g);
}

std::optional<fs::path> find_graph(const fs::path& root, const std::string& generator, uint64_t seed) {
  for (const char* ext : {".json", ".csv"}) {
    const fs::path p = root / "graphs" / (stem_for(generator, seed) + ext);
    if (fs::exists(p)) return p;
  }
  return std::nullopt;
}

Graph build(const RunConfig& c, const std::string& generator, uint64_t seed, uint64_t growth_edges) {
  soenet_graph* g = nullptr;
  const auto gp = c.growth_for_seed(seed);
  const auto* lv = c.hierarchy.data();
  const auto nl = c.hierarchy.size();
  if (generator == "growth") {
    check(soenet_generate_growth(lv, nl, &gp, &g), "growth generator");
  } else if (generator == "partial") {
    check(soenet_generate_partial(lv, nl, &gp, &g), "partial generator");
  } else {
    uint64_t m = c.random.n_edges ? c.random.n_edges : growth_edges;
    if (m == 0)
      throw Failure(SOENET_DEPENDENCY_ERROR,
                    "random.n_edges is 0, which matches the growth network, but no growth network was built");
    check(soenet_generate_random(lv, nl, m, seed, &g), "random generator");
  }
  return adopt(g);
}

// ---------------------------------------------------------------- generate

struct Generated {
  std::string generator;
  uint64_t seed;
  std::string path;
  uint64_t n_nodes, n_edges;
  std::vector<double> census;
};

std::vector<Generated> generate_all(const Options& o, ArtifactStore& store) {
  const auto& c = o.config;
  if (o.format == "svg") throw Failure(SOENET_INVALID_ARGUMENT, "generate writes graphs as json or csv, not svg");
  std::vector<std::vector<Generated>> per_seed(c.seeds.size());
  parallel_for(c.seeds.size(), [&](size_t i) {
    const uint64_t seed = c.seeds[i];
    uint64_t growth_edges = 0;
    std::vector<std::string> order = c.generators;
    // The random network may need the growth edge count of the same seed.
    std::stable_partition(order.begin(), order.end(), [](const std::string& g) { return g == "growth"; });
    for (const auto& gen : order) {
      Graph g = build(c, gen, seed, growth_edges);
      if (gen == "growth") growth_edges = soenet_graph_n_edges(g.get());
      char* text = nullptr;
      check(o.format == "csv" ? soenet_graph_to_csv(g.get(), &text) : soenet_graph_to_json(g.get(), &text),
            "serialising graph");
      const std::string rel = "graphs/" + stem_for(gen, seed) + "." + o.format;
      store.write(rel, take_string(text));
      std::vector<double> census(soenet_graph_depth(g.get()));
      check(soenet_edge_census(g.get(), census.data(), census.size()), "edge census");
      per_seed[i].push_back({gen, seed, rel, soenet_graph_n_nodes(g.get()), soenet_graph_n_edges(g.get()), census});
      say(o, gen + " seed " + std::to_string(seed) + ": " + std::to_string(soenet_graph_n_nodes(g.get())) +
                 " nodes, " + std::to_string(soenet_graph_n_edges(g.get())) + " edges");
    }
  });
  std::vector<Generated> all;
  for (auto& v : per_seed) all.insert(all.end(), v.begin(), v.end());
  ordered_json report = ordered_json::array();
  for (const auto& g : all)
    report.push_back({{"generator", g.generator},
                      {"seed", g.seed},
                      {"path", g.path},
                      {"n_nodes", g.n_nodes},
                      {"n_edges", g.n_edges},
                      {"census", g.census}});
  store.write("graphs/generation_report.json", report.dump(2) + "\n");
  return all;
}

// ----------------------------------------------------------------- analyze

struct Analysis {
  std::string stem, network;
  std::optional<uint64_t> seed;
  json metrics;
  double swi = std::nan("");
};

std::string network_of(const std::string& stem, std::optional<uint64_t>& seed) {
  const auto pos = stem.rfind("_seed");
  if (pos == std::string::npos) return stem;
  try {
    seed = std::stoull(stem.substr(pos + 5));
  } catch (const std::exception&) {
    return stem;
  }
  return stem.substr(0, pos);
}

void write_degree_files(ArtifactStore& store, const std::string& stem, const soenet_graph* g) {
  const auto n = soenet_graph_n_nodes(g);
  const auto d = degrees_of(g);
  std::vector<int64_t> x(n), y(n);
  check(soenet_graph_positions(g, x.data(), y.data(), n), "positions");
  CsvWriter grid({"x", "y", "log10_k_in", "log10_k_out", "log10_k_total"});
  uint32_t kmax = 0;
  for (size_t i = 0; i < n; ++i) {
    const double tot = double(d.in[i]) + d.out[i];
    grid.row({std::to_string(x[i]), std::to_string(y[i]), num(std::log10(double(d.in[i]))),
              num(std::log10(double(d.out[i]))), num(std::log10(tot))});
    kmax = std::max(kmax, d.in[i] + d.out[i]);
  }
  store.write("analysis/" + stem + "_degree_grid.csv", grid.text());

  std::vector<uint64_t> hin(kmax + 1), hout(kmax + 1), htot(kmax + 1);
  for (size_t i = 0; i < n; ++i) {
    ++hin[d.in[i]];
    ++hout[d.out[i]];
    ++htot[d.in[i] + d.out[i]];
  }
  CsvWriter hist({"k", "count_in", "count_out", "count_total"});
  for (uint32_t k = 0; k <= kmax; ++k)
    if (hin[k] || hout[k] || htot[k])
      hist.row({std::to_string(k), std::to_string(hin[k]), std::to_string(hout[k]), std::to_string(htot[k])});
  store.write("analysis/" + stem + "_degree_hist.csv", hist.text());
}

std::vector<fs::path> default_graph_inputs(const fs::path& root) {
  std::vector<fs::path> files;
  const fs::path dir = root / "graphs";
  if (fs::is_directory(dir))
    for (const auto& e : fs::directory_iterator(dir)) {
      const auto name = e.path().filename().string();
      if (name == "generation_report.json") continue;
      if (e.path().extension() == ".json" || e.path().extension() == ".csv") files.push_back(e.path());
    }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<Analysis> analyze_all(const Options& o, ArtifactStore& store) {
  const auto& c = o.config;
  std::vector<fs::path> files(o.inputs.begin(), o.inputs.end());
  if (files.empty()) files = default_graph_inputs(store.root());
  if (files.empty())
    throw Failure(SOENET_DEPENDENCY_ERROR,
                  "no graphs to analyze: pass files or run 'generate' into " + store.root().string() + " first");

  std::vector<Analysis> results;
  for (const auto& f : files) {
    Graph g = load_graph(f, c);
    Analysis a;
    a.stem = f.stem().string();
    a.network = network_of(a.stem, a.seed);
    char* text = nullptr;
    check(soenet_metrics_json(g.get(), &c.metrics, a.stem.c_str(), &text), "metrics for '" + f.string() + "'");
    a.metrics = json::parse(take_string(text));
    write_degree_files(store, a.stem, g.get());
    say(o, "analyzed " + f.string() + ": CC " + num(jnum(a.metrics["clustering"])) + ", APL " +
               num(jnum(a.metrics["paths"]["mean"])));
    results.push_back(std::move(a));
  }

  // Small-world index against the random network of the same seed, falling
  // back to the mean over all random networks analysed.
  std::map<uint64_t, const Analysis*> random_by_seed;
  std::vector<double> rcc, rapl;
  for (const auto& a : results)
    if (a.network == "random") {
      if (a.seed) random_by_seed[*a.seed] = &a;
      rcc.push_back(jnum(a.metrics["clustering"]));
      rapl.push_back(jnum(a.metrics["paths"]["mean"]));
    }
  const double base_cc = mean_sd(rcc).mean, base_apl = mean_sd(rapl).mean;
  for (auto& a : results) {
    double bc = base_cc, bl = base_apl;
    if (a.seed && random_by_seed.count(*a.seed)) {
      bc = jnum(random_by_seed[*a.seed]->metrics["clustering"]);
      bl = jnum(random_by_seed[*a.seed]->metrics["paths"]["mean"]);
    }
    double swi = std::nan("");
    if (std::isfinite(bc) && std::isfinite(bl) &&
        soenet_small_world_index(jnum(a.metrics["clustering"]), jnum(a.metrics["paths"]["mean"]), bc, bl, &swi) !=
            SOENET_OK)
      swi = std::nan("");
    a.swi = swi;
    a.metrics["swi"] = jout(swi);
    store.write("analysis/" + a.stem + "_metrics.json", a.metrics.dump() + "\n");
  }

  auto fit_gamma = [](const json& fit) { return fit.is_null() ? std::nan("") : jnum(fit["gamma"]); };
  CsvWriter per({"graph", "network", "seed", "n_nodes", "n_edges", "clustering", "path_length", "swi",
                 "gamma_in", "gamma_out", "min_total_degree", "max_total_degree", "rent_exponent"});
  for (const auto& a : results) {
    const auto& m = a.metrics;
    per.row({a.stem, a.network, a.seed ? std::to_string(*a.seed) : "", std::to_string(m["n_nodes"].get<uint64_t>()),
             std::to_string(m["n_edges"].get<uint64_t>()), num(jnum(m["clustering"])), num(jnum(m["paths"]["mean"])),
             num(a.swi), num(fit_gamma(m["fits"]["in"])), num(fit_gamma(m["fits"]["out"])),
             num(jnum(m["degrees"]["total"]["min"])), num(jnum(m["degrees"]["total"]["max"])),
             num(jnum(m["rent"]["exponent"]))});
  }
  store.write("analysis/metrics_per_graph.csv", per.text());

  std::vector<std::string> networks;
  for (const auto& a : results)
    if (std::find(networks.begin(), networks.end(), a.network) == networks.end()) networks.push_back(a.network);
  CsvWriter table({"network", "n_graphs", "edges_mean", "edges_sd", "clustering_mean", "clustering_sd",
                   "path_length_mean", "path_length_sd", "swi_mean", "swi_sd"});
  CsvWriter census({"network", "level", "edges_per_node_mean", "edges_per_node_sd"});
  for (const auto& net : networks) {
    std::vector<double> e, cc, apl, swi;
    std::vector<std::vector<double>> levels;
    size_t count = 0;
    for (const auto& a : results) {
      if (a.network != net) continue;
      ++count;
      e.push_back(jnum(a.metrics["n_edges"]));
      cc.push_back(jnum(a.metrics["clustering"]));
      apl.push_back(jnum(a.metrics["paths"]["mean"]));
      swi.push_back(a.swi);
      const auto& cen = a.metrics["census"];
      if (levels.size() < cen.size()) levels.resize(cen.size());
      for (size_t l = 0; l < cen.size(); ++l) levels[l].push_back(jnum(cen[l]));
    }
    const auto se = mean_sd(e), sc = mean_sd(cc), sl = mean_sd(apl), ss = mean_sd(swi);
    table.row({net, std::to_string(count), num(se.mean), num(se.sd), num(sc.mean), num(sc.sd), num(sl.mean),
               num(sl.sd), num(ss.mean), num(ss.sd)});
    for (size_t l = 0; l < levels.size(); ++l) {
      const auto s = mean_sd(levels[l]);
      census.row({net, std::to_string(l), num(s.mean), num(s.sd)});
    }
  }
  store.write("analysis/table1.csv", table.text());
  store.write("analysis/census.csv", census.text());
  return results;
}

// -------------------------------------------------------------------- area

soenet_area_law law_from(const json& j) {
  return {j.at("coefficient").get<double>(), j.at("exponent").get<double>(), j.at("plane_pairs").get<uint32_t>(),
          jnum(j.value("residual", json(nullptr)))};
}

/// The fitted A_n(k) law, from the config or from a previous exact run.
soenet_area_law resolve_law(const RunConfig& c, const fs::path& root) {
  if (c.area_law) return *c.area_law;
  const fs::path p = root / "area" / "area_law.json";
  if (!fs::exists(p))
    throw Failure(SOENET_DEPENDENCY_ERROR,
                  "no area law: set 'area_law' in the config or run 'area --mode exact' on a growth graph first");
  try {
    return law_from(json::parse(read_file(p)));
  } catch (const json::exception& e) {
    throw Failure(SOENET_PARSE_ERROR, "'" + p.string() + "': " + e.what());
  }
}

struct ExactResult {
  std::string stem;
  soenet_area_summary summary{};
  bool guard_overridden = false;
  std::optional<soenet_area_law> law;
};

ExactResult area_exact(const Options& o, ArtifactStore& store, const fs::path& file, bool override_guard) {
  const auto& c = o.config;
  Graph g = load_graph(file, c);
  ExactResult r;
  r.stem = file.stem().string();
  const auto n = soenet_graph_n_nodes(g.get());
  std::vector<double> area(n), degree(n);
  soenet_physical_params p = c.physical;
  soenet_status s = soenet_network_area(g.get(), &p, &r.summary, area.data(), degree.data(), n);
  if (s == SOENET_INVALID_ARGUMENT && override_guard && !p.allow_nonlocal) {
    say(o, "area of " + r.stem + " rejected (" + soenet_last_error() + "); re-evaluating with the locality guard off");
    p.allow_nonlocal = 1;
    r.guard_overridden = true;
    s = soenet_network_area(g.get(), &p, &r.summary, area.data(), degree.data(), n);
  }
  check(s, "area of '" + file.string() + "'");

  std::vector<int64_t> x(n), y(n);
  check(soenet_graph_positions(g.get(), x.data(), y.data(), n), "positions");
  CsvWriter nodes({"node", "x", "y", "degree", "area_m2"});
  for (size_t i = 0; i < n; ++i)
    nodes.row({std::to_string(i), std::to_string(x[i]), std::to_string(y[i]), num(degree[i]), num(area[i])});
  store.write("area/" + r.stem + "_node_area.csv", nodes.text());

  ordered_json levels = ordered_json::array();
  for (size_t l = 0; l < r.summary.levels; ++l)
    levels.push_back({{"level", l},
                      {"routing_area_m2", r.summary.level_routing_area[l]},
                      {"plane_pairs", r.summary.level_plane_pairs[l]}});
  ordered_json j = {{"graph", display_path(store.root(), file)},
                    {"total_area_m2", r.summary.total_area},
                    {"total_area_cm2", r.summary.total_area * 1e4},
                    {"footprint_area_m2", r.summary.footprint_area},
                    {"levels", levels},
                    {"locality_guard_overridden", r.guard_overridden}};
  if (r.summary.has_fit) {
    const uint32_t pp = c.physical.plane_pairs;
    r.law = soenet_area_law{r.summary.fit_coefficient, r.summary.fit_exponent, pp, std::nan("")};
    soenet_area_law full{};
    if (soenet_area_fit(area.data(), degree.data(), n, pp, &full) == SOENET_OK) r.law = full;
    j["fit"] = {{"coefficient", r.law->coefficient},
                {"exponent", r.law->exponent},
                {"plane_pairs", r.law->plane_pairs},
                {"residual", jout(r.law->residual)}};
  } else {
    j["fit"] = nullptr;
  }
  store.write("area/" + r.stem + "_area.json", j.dump(2) + "\n");

  if (o.format == "svg") {
    soenet_graph* sector = nullptr;
    check(soenet_graph_subgraph(g.get(), 0, 0, &sector), "sector subgraph");
    Graph sec = adopt(sector);
    soenet_grid grid{};
    check(soenet_graph_level(sec.get(), 0, &grid), "sector grid");
    const long long centre = (long long)(grid.rows / 2) * grid.cols + grid.cols / 2;
    char *svg = nullptr, *csv = nullptr;
    size_t segments = 0;
    check(soenet_routing_layout(sec.get(), &c.physical, o.highlight >= 0 ? o.highlight : centre, &svg, &csv,
                                &segments),
          "routing layout");
    store.write("area/" + r.stem + "_sector0_routing.svg", take_string(svg));
    store.write("area/" + r.stem + "_sector0_routing.csv", take_string(csv));
    say(o, "routing layout of sector 0: " + std::to_string(segments) + " segments");
  }
  say(o, "area of " + r.stem + ": " + num(r.summary.total_area * 1e4) + " cm^2");
  return r;
}

ordered_json law_json(const soenet_area_law& l) {
  return {{"coefficient", l.coefficient}, {"exponent", l.exponent}, {"plane_pairs", l.plane_pairs},
          {"residual", jout(l.residual)}};
}

ordered_json capacity_report(const RunConfig& c, const soenet_area_law& law, const std::vector<double>& k0s) {
  std::vector<uint32_t> pps = c.sweep.plane_pairs;
  if (std::find(pps.begin(), pps.end(), c.physical.plane_pairs) == pps.end()) pps.push_back(c.physical.plane_pairs);
  ordered_json scaling = ordered_json::array(), delta = ordered_json::array();
  for (uint32_t pp : pps) {
    double a = 0, die = 0, wafer = 0;
    double kmax = 0;
    check(soenet_max_degree(c.scaling.gamma, c.scaling.k_min, double(c.n_nodes()), &kmax), "max degree");
    check(soenet_network_area_scaling(double(c.n_nodes()), c.scaling.gamma, c.scaling.k_min, kmax, &law, pp, &a),
          "scaling area");
    check(soenet_scaling_capacity(soenet_die_area(), c.scaling.gamma, c.scaling.k_min, &law, pp, &die), "die capacity");
    check(soenet_scaling_capacity(soenet_wafer_area(), c.scaling.gamma, c.scaling.k_min, &law, pp, &wafer),
          "wafer capacity");
    scaling.push_back({{"plane_pairs", pp},
                       {"n_tot", c.n_nodes()},
                       {"k_max", kmax},
                       {"area_m2", a},
                       {"die_capacity", die},
                       {"wafer_capacity", wafer}});
    for (double k0 : k0s) {
      double d = 0, w = 0;
      check(soenet_delta_degree_capacity(k0, soenet_die_area(), &law, pp, &d), "delta capacity");
      check(soenet_delta_degree_capacity(k0, soenet_wafer_area(), &law, pp, &w), "delta capacity");
      delta.push_back({{"plane_pairs", pp}, {"k0", k0}, {"die_capacity", d}, {"wafer_capacity", w}});
    }
  }
  return {{"law", law_json(law)},
          {"die_area_m2", soenet_die_area()},
          {"wafer_area_m2", soenet_wafer_area()},
          {"scaling", scaling},
          {"delta", delta}};
}

void write_feedforward(const RunConfig& c, ArtifactStore& store) {
  soenet_feedforward_report ff{};
  check(soenet_feedforward(c.feedforward_neurons, &c.physical, c.loss_db_per_m, &ff), "feed-forward");
  ordered_json j = {{"neurons_per_layer", c.feedforward_neurons},
                    {"layer_width_m", ff.layer_width},
                    {"layer_height_m", ff.layer_height},
                    {"max_distance_m", ff.max_distance},
                    {"loss_db_per_m", c.loss_db_per_m},
                    {"loss_db", ff.loss_db}};
  store.write("area/feedforward.json", j.dump(2) + "\n");
}

std::vector<ExactResult> area_exact_all(const Options& o, ArtifactStore& store, bool override_guard) {
  std::vector<fs::path> files(o.inputs.begin(), o.inputs.end());
  if (files.empty()) {
    for (uint64_t seed : o.config.seeds) {
      auto p = find_graph(store.root(), "growth", seed);
      if (!p)
        throw Failure(SOENET_DEPENDENCY_ERROR, "exact area needs a growth graph: " +
                                                   (store.root() / "graphs" / (stem_for("growth", seed) + ".json")).string() +
                                                   " is missing (run 'generate' or pass --graph)");
      files.push_back(*p);
    }
  }
  std::vector<ExactResult> out;
  for (const auto& f : files) out.push_back(area_exact(o, store, f, override_guard));
  for (const auto& r : out)
    if (r.law) {
      store.write("area/area_law.json", law_json(*r.law).dump(2) + "\n");
      break;
    }
  return out;
}

// ------------------------------------------------------------------- sweeps

void sweep_fig5a(const RunConfig& c, const soenet_area_law& law, ArtifactStore& store) {
  CsvWriter csv({"x", "y", "label"});
  for (uint32_t pp : c.sweep.plane_pairs)
    for (double n : c.sweep.n_tot.values()) {
      double kmax = 0, a = 0;
      check(soenet_max_degree(c.scaling.gamma, c.scaling.k_min, n, &kmax), "max degree");
      check(soenet_network_area_scaling(n, c.scaling.gamma, c.scaling.k_min, kmax, &law, pp, &a), "scaling area");
      csv.row({num(n), num(a), "planes=" + std::to_string(pp)});
    }
  store.write("sweeps/fig5a_area_vs_n.csv", csv.text());
}

void sweep_fig5b(const RunConfig& c, const soenet_area_law& law, ArtifactStore& store) {
  CsvWriter csv({"x", "y", "label"});
  const std::pair<const char*, double> targets[] = {{"die", soenet_die_area()}, {"wafer", soenet_wafer_area()}};
  for (const auto& [name, area] : targets)
    for (uint32_t pp : c.sweep.plane_pairs)
      for (double k0 : c.sweep.k0.values()) {
        double cap = 0;
        check(soenet_delta_degree_capacity(k0, area, &law, pp, &cap), "delta capacity");
        csv.row({num(k0), num(cap), std::string(name) + "_planes=" + std::to_string(pp)});
      }
  store.write("sweeps/fig5b_capacity_vs_k0.csv", csv.text());
}

void sweep_fig5c(const RunConfig& c, ArtifactStore& store) {
  CsvWriter csv({"x", "y", "label"});
  const std::pair<const char*, double> platforms[] = {{"soen", c.pool.soen.velocity},
                                                      {"brain", c.pool.brain.velocity}};
  for (const auto& [name, v] : platforms)
    for (double f : c.sweep.frequency.values()) {
      double a = 0;
      check(soenet_pool_area(v, f, &a), "pool area");
      csv.row({num(f), num(a), name});
    }
  store.write("sweeps/fig5c_pool_area_vs_f.csv", csv.text());
}

void sweep_fig7(const RunConfig& c, ArtifactStore& store) {
  CsvWriter a({"x", "y", "label"}), b({"x", "y", "label"}), m({"x", "y", "label"});
  for (double g : c.sweep.gammas)
    for (double n : c.sweep.fig7_n_tot.values()) {
      const std::string label = "gamma=" + num(g);
      double kmax = 0, ktot = 0, kbar = 0;
      check(soenet_max_degree(g, c.scaling.k_min, n, &kmax), "max degree");
      check(soenet_total_edges(g, c.scaling.k_min, kmax, n, &ktot), "total edges");
      check(soenet_mean_degree(g, c.scaling.k_min, kmax, &kbar), "mean degree");
      a.row({num(n), num(ktot), label});
      b.row({num(n), num(kmax), label});
      m.row({num(n), num(kbar), label});
    }
  store.write("sweeps/fig7a_total_edges.csv", a.text());
  store.write("sweeps/fig7b_max_degree.csv", b.text());
  store.write("sweeps/fig7c_mean_degree.csv", m.text());
}

void sweep_fig14(const RunConfig& c, ArtifactStore& store) {
  CsvWriter csv({"eta", "photonic_j", "fluxonic_j"});
  for (double eta : c.sweep.eta.values()) {
    soenet_power_params p = c.power;
    p.eta = eta;
    soenet_firing_energy e{};
    check(soenet_energy(1.0, &p, &e), "firing energy");
    csv.row({num(eta), num(e.photonic), num(e.fluxonic)});
  }
  store.write("sweeps/fig14_energy_vs_eta.csv", csv.text());
}

/// Power and power density along the fig5a node-count sweep, using the
/// scaling degree law for both so the two integrals see the same ensemble.
std::vector<double> sweep_power(const RunConfig& c, const soenet_area_law& law, ArtifactStore& store) {
  CsvWriter csv({"n_tot", "gamma", "mu", "power_w", "power_density_w_per_m2"});
  std::vector<double> density;
  for (double n : c.sweep.n_tot.values()) {
    double kmax = 0, a = 0, pw = 0, dens = 0;
    check(soenet_max_degree(c.scaling.gamma, c.scaling.k_min, n, &kmax), "max degree");
    check(soenet_network_area_scaling(n, c.scaling.gamma, c.scaling.k_min, kmax, &law, c.physical.plane_pairs, &a),
          "scaling area");
    soenet_power_params p = c.power;
    p.gamma = c.scaling.gamma;
    p.k_min = c.scaling.k_min;
    p.k_max = kmax;
    check(soenet_total_power(n, &p, &pw), "network power");
    check(soenet_power_density(pw, a, &dens), "power density");
    csv.row({num(n), num(p.gamma), num(p.mu), num(pw), num(dens)});
    density.push_back(dens);
  }
  store.write("sweeps/power_vs_n.csv", csv.text());
  return density;
}

const std::vector<std::string> kSweeps{"fig5a", "fig5b", "fig5c", "fig7", "fig14", "power"};

int run_sweeps(const Options& o, ArtifactStore& store) {
  std::vector<std::string> names = o.sweeps;
  if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) names = kSweeps;
  const auto& c = o.config;
  std::optional<soenet_area_law> law;
  auto need_law = [&]() -> const soenet_area_law& {
    if (!law) law = resolve_law(c, store.root());
    return *law;
  };
  for (const auto& n : names) {
    if (n == "fig5a")
      sweep_fig5a(c, need_law(), store);
    else if (n == "fig5b")
      sweep_fig5b(c, need_law(), store);
    else if (n == "fig5c")
      sweep_fig5c(c, store);
    else if (n == "fig7")
      sweep_fig7(c, store);
    else if (n == "fig14")
      sweep_fig14(c, store);
    else if (n == "power")
      sweep_power(c, need_law(), store);
    else
      throw Failure(SOENET_INVALID_ARGUMENT, "unknown sweep '" + n + "'");
    say(o, "sweep " + n + " written");
  }
  return 0;
}

// ------------------------------------------------------------- power, pool

ordered_json power_report(const Options& o, ArtifactStore& store) {
  const auto& c = o.config;
  const double n = double(c.n_nodes());
  soenet_firing_energy e{};
  check(soenet_energy(1.0, &c.power, &e), "firing energy");
  double pn = 0, pq = 0, total = 0, dens = 0, b2 = 0, pexp = 0, aexp = 0, sexp = 0;
  int one_over_f = 0;
  check(soenet_network_power(n, &c.power, &pn), "network power");
  check(soenet_network_power_quadrature(n, &c.power, &pq), "network power quadrature");
  check(soenet_total_power(n, &c.power, &total), "total power");
  check(soenet_power_density(total, soenet_die_area(), &dens), "power density");
  check(soenet_frequency_normalization(c.power.mu, c.power.f_min, c.power.f_max, &b2), "frequency normalization");
  check(soenet_scaling_exponents(c.power.gamma, 1.4, &pexp, &aexp), "scaling exponents");
  check(soenet_spectral_density(c.power.mu, &sexp, &one_over_f), "spectral density");
  ordered_json j = {{"n_tot", n},
                    {"energy_per_edge_j", e.total},
                    {"photonic_j", e.photonic},
                    {"fluxonic_j", e.fluxonic},
                    {"frequency_normalization", b2},
                    {"network_power_w", pn},
                    {"network_power_quadrature_w", pq},
                    {"total_power_w", total},
                    {"power_density_on_die_w_per_m2", dens},
                    {"power_k_exponent", pexp},
                    {"area_k_exponent", aexp},
                    {"spectral_exponent", sexp},
                    {"one_over_f", one_over_f != 0}};

  // Same calculation with the degree range observed in a generated network.
  std::optional<fs::path> file;
  if (!o.inputs.empty()) file = fs::path(o.inputs.front());
  else file = find_graph(store.root(), "growth", c.seeds.front());
  if (file) {
    Graph g = load_graph(*file, c);
    const auto d = degrees_of(g.get());
    uint32_t lo = UINT32_MAX, hi = 0;
    for (uint32_t k : d.in)
      if (k > 0) {
        lo = std::min(lo, k);
        hi = std::max(hi, k);
      }
    if (hi > 0) {
      soenet_power_params p = c.power;
      p.k_min = lo;
      p.k_max = hi;
      double pg = 0;
      check(soenet_total_power(double(soenet_graph_n_nodes(g.get())), &p, &pg), "network power");
      j["graph"] = {{"path", display_path(store.root(), *file)}, {"k_min", lo}, {"k_max", hi}, {"total_power_w", pg}};
    }
  }
  store.write("power/power.json", j.dump(2) + "\n");
  say(o, "network power: " + num(total) + " W");
  return j;
}

ordered_json pool_report(const RunConfig& c, ArtifactStore& store) {
  ordered_json freqs = ordered_json::array();
  for (double f : c.pool.frequencies) {
    double d = 0, a = 0;
    check(soenet_pool_diameter(c.pool.soen.velocity, f, &d), "pool diameter");
    check(soenet_pool_area(c.pool.soen.velocity, f, &a), "pool area");
    freqs.push_back({{"frequency_hz", f}, {"diameter_m", d}, {"area_m2", a}});
  }
  double ratio = 0;
  check(soenet_pool_count_ratio(c.pool.soen.velocity, c.pool.soen.width, c.pool.brain.velocity, c.pool.brain.width,
                                &ratio),
        "pool ratio");
  ordered_json j = {{"velocity_m_per_s", c.pool.soen.velocity}, {"pools", freqs}, {"count_ratio", ratio}};
  store.write("pool/pool.json", j.dump(2) + "\n");
  return j;
}

}  // namespace

// ---------------------------------------------------------------- commands

int cmd_generate(const Options& o) {
  ArtifactStore store(o.config, o.config.output);
  generate_all(o, store);
  store.write_manifest();
  return 0;
}

int cmd_analyze(const Options& o) {
  ArtifactStore store(o.config, o.config.output);
  analyze_all(o, store);
  store.write_manifest();
  return 0;
}

int cmd_area(const Options& o) {
  ArtifactStore store(o.config, o.config.output);
  if (o.area_mode == "exact") {
    area_exact_all(o, store, false);
  } else if (o.area_mode == "scaling" || o.area_mode == "delta") {
    const auto law = resolve_law(o.config, store.root());
    store.write("area/capacity.json", capacity_report(o.config, law, o.k0).dump(2) + "\n");
  } else {
    throw Failure(SOENET_INVALID_ARGUMENT, "unknown area mode '" + o.area_mode + "'");
  }
  write_feedforward(o.config, store);
  store.write_manifest();
  return 0;
}

int cmd_power(const Options& o) {
  ArtifactStore store(o.config, o.config.output);
  power_report(o, store);
  store.write_manifest();
  return 0;
}

int cmd_pool(const Options& o) {
  ArtifactStore store(o.config, o.config.output);
  const auto j = pool_report(o.config, store);
  say(o, "pool count ratio: " + num(j["count_ratio"].get<double>()));
  store.write_manifest();
  return 0;
}

int cmd_sweep(const Options& o) {
  ArtifactStore store(o.config, o.config.output);
  run_sweeps(o, store);
  store.write_manifest();
  return 0;
}

int cmd_reproduce(const Options& o) {
  Options opt = o;
  opt.inputs.clear();
  ArtifactStore store(opt.config, opt.config.output);
  const auto generated = generate_all(opt, store);
  const auto analysis = analyze_all(opt, store);
  const auto areas = area_exact_all(opt, store, true);
  std::optional<soenet_area_law> law = opt.config.area_law;
  for (const auto& r : areas)
    if (!law && r.law) law = r.law;
  if (!law) throw Failure(SOENET_FIT_FAILURE, "no growth network produced a usable area-versus-degree fit");
  store.write("area/capacity.json", capacity_report(opt.config, *law, opt.k0).dump(2) + "\n");
  write_feedforward(opt.config, store);

  opt.sweeps = kSweeps;
  RunConfig with_law = opt.config;
  with_law.area_law = law;
  Options sweep_opt = opt;
  sweep_opt.config = with_law;
  run_sweeps(sweep_opt, store);
  const auto power = power_report(opt, store);
  const auto pool = pool_report(opt.config, store);

  std::string s = "Reproduction summary\n====================\n\n";
  s += "Networks (mean +- sd over " + std::to_string(opt.config.seeds.size()) + " seeds)\n";
  s += read_file(store.root() / "analysis" / "table1.csv") + "\n";
  s += "Hierarchy census (edges per node by deepest shared level)\n";
  s += read_file(store.root() / "analysis" / "census.csv") + "\n";
  s += "Exact area of growth networks\n";
  for (const auto& r : areas)
    s += "  " + r.stem + ": " + num(r.summary.total_area * 1e4) + " cm^2" +
         (r.summary.has_fit ? ", fit exponent " + num(r.summary.fit_exponent) : "") +
         (r.guard_overridden ? "  (locality guard overridden)" : "") + "\n";
  s += "Area law used for extrapolation: A_n(k) = " + num(law->coefficient) + " * k^" + num(law->exponent) + " at " +
       std::to_string(law->plane_pairs) + " plane pairs\n\n";
  s += "Energy per edge: " + num(power["energy_per_edge_j"].get<double>()) + " J\n";
  s += "Network power (" + num(power["n_tot"].get<double>()) + " nodes): " +
       num(power["total_power_w"].get<double>()) + " W\n";
  s += "Pool count ratio: " + num(pool["count_ratio"].get<double>()) + "\n";
  store.write("summary.txt", s);
  store.write_manifest();
  if (!o.quiet) std::cout << s;
  (void)generated;
  (void)analysis;
  return 0;
}

}  // namespace cli

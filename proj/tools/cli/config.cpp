#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "api.hpp"

namespace cli {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<double> Range::values() const {
  std::vector<double> v;
  if (points == 1) return {min};
  const double lo = std::log10(min), hi = std::log10(max);
  for (uint32_t i = 0; i < points; ++i) v.push_back(std::pow(10.0, lo + (hi - lo) * i / (points - 1)));
  v.front() = min;
  v.back() = max;
  return v;
}

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Failure(SOENET_INVALID_ARGUMENT, "config key '" + path + "': " + what);
}

/// Walks one JSON object, tracking which keys were consumed so leftovers can
/// be reported as unknown.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) bad(path_.empty() ? "<root>" : path_, "expected an object");
  }

  std::string key_path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  template <class T>
  void get(const std::string& key, T& out) {
    if (const json* v = find(key)) {
      try {
        out = read<T>(*v);
      } catch (const json::exception& e) {
        bad(key_path(key), std::string("wrong type (") + e.what() + ")");
      }
    }
  }

  Section child(const std::string& key, const json*& holder) {
    holder = find(key);
    static const json empty = json::object();
    return Section(holder ? *holder : empty, key_path(key));
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) bad(key_path(it.key()), "unknown key");
  }

 private:
  template <class T>
  static T read(const json& v) {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw json::type_error::create(302, "expected a boolean", &v);
      return v.get<bool>();
    } else if constexpr (std::is_integral_v<T>) {
      if (!(std::is_unsigned_v<T> ? v.is_number_unsigned() : v.is_number_integer()))
        throw json::type_error::create(302, "expected an integer", &v);
      return v.get<T>();
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw json::type_error::create(302, "expected a number", &v);
      return v.get<T>();
    } else {
      return v.get<T>();
    }
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void read_range(Section& parent, const std::string& key, Range& r) {
  const json* holder = nullptr;
  Section s = parent.child(key, holder);
  s.get("min", r.min);
  s.get("max", r.max);
  s.get("points", r.points);
  s.finish();
  if (!(r.min > 0.0) || !(r.max >= r.min) || r.points < 1)
    bad(parent.key_path(key), "need 0 < min <= max and points >= 1");
}

void read_platform(Section& parent, const std::string& key, PlatformConfig& p) {
  const json* holder = nullptr;
  Section s = parent.child(key, holder);
  s.get("velocity", p.velocity);
  s.get("width", p.width);
  s.finish();
}

ordered_json range_json(const Range& r) { return {{"min", r.min}, {"max", r.max}, {"points", r.points}}; }

}  // namespace

RunConfig::RunConfig() {
  soenet_growth_params_default(&growth);
  n_win.assign(growth.n_win_per_level, growth.n_win_per_level + growth.n_win_count);
  soenet_metrics_options_default(&metrics);
  soenet_physical_params_default(&physical);
  soenet_power_params_default(&power);
  bind();
}

RunConfig::RunConfig(const RunConfig& other) { *this = other; }

RunConfig& RunConfig::operator=(const RunConfig& other) {
  if (this == &other) return *this;
  hierarchy = other.hierarchy;
  seeds = other.seeds;
  output = other.output;
  generators = other.generators;
  growth = other.growth;
  n_win = other.n_win;
  random = other.random;
  metrics = other.metrics;
  physical = other.physical;
  level_plane_pairs = other.level_plane_pairs;
  power = other.power;
  pool = other.pool;
  scaling = other.scaling;
  area_law = other.area_law;
  sweep = other.sweep;
  loss_db_per_m = other.loss_db_per_m;
  feedforward_neurons = other.feedforward_neurons;
  bind();
  return *this;
}

void RunConfig::bind() {
  growth.n_win_per_level = n_win.data();
  growth.n_win_count = n_win.size();
  physical.level_plane_pairs = level_plane_pairs.empty() ? nullptr : level_plane_pairs.data();
  physical.n_level_plane_pairs = level_plane_pairs.size();
}

soenet_growth_params RunConfig::growth_for_seed(uint64_t seed) const {
  soenet_growth_params g = growth;
  g.seed = seed;
  return g;
}

uint64_t RunConfig::n_nodes() const {
  uint64_t n = 1;
  for (const auto& l : hierarchy) n *= uint64_t{l.rows} * l.cols;
  return n;
}

void RunConfig::validate() const {
  soenet_graph* probe = nullptr;
  check(soenet_graph_create(hierarchy.data(), hierarchy.size(), &probe), "config key 'hierarchy'");
  soenet_graph_free(probe);
  if (seeds.empty()) bad("seeds", "at least one seed is required");
  static const std::set<std::string> known{"growth", "partial", "random"};
  for (const auto& g : generators)
    if (!known.count(g)) bad("generators", "unknown generator '" + g + "'");
  if (n_win.size() + 1 < hierarchy.size()) bad("growth.n_win_per_level", "needs one entry per level above the sector");
  double scratch = 0.0;
  check(soenet_effective_length(1.0, 0.0, 1.0, &growth, &scratch), "config section 'growth'");
  check(soenet_tap_pitch(&physical, &scratch), "config section 'physical'");
  soenet_firing_energy e;
  check(soenet_energy(0.0, &power, &e), "config section 'power'");
  if (!(power.mu > 1.0)) bad("power.mu", "must exceed 1");
  for (const auto* p : {&pool.soen, &pool.brain})
    if (!(p->velocity > 0.0) || !(p->width > 0.0)) bad("pool", "velocities and widths must be positive");
  for (double f : pool.frequencies)
    if (!(f > 0.0)) bad("pool.frequencies", "frequencies must be positive");
  if (!(scaling.gamma > 1.0) || !(scaling.k_min >= 1.0)) bad("scaling", "need gamma > 1 and k_min >= 1");
  for (uint32_t pp : sweep.plane_pairs)
    if (pp == 0) bad("sweep.plane_pairs", "plane pair counts must be positive");
  for (double g : sweep.gammas)
    if (!(g > 1.0)) bad("sweep.gammas", "exponents must exceed 1");
  if (area_law && (!(area_law->coefficient > 0.0) || area_law->plane_pairs == 0))
    bad("area_law", "need a positive coefficient and plane_pairs");
  if (!(loss_db_per_m >= 0.0)) bad("feedforward.loss_db_per_m", "must be non-negative");
  if (feedforward_neurons == 0) bad("feedforward.neurons_per_layer", "must be positive");
}

RunConfig parse_config(const json& doc) {
  RunConfig c;
  Section root(doc, "");

  if (const json* h = root.find("hierarchy")) {
    if (!h->is_array()) bad("hierarchy", "expected an array of [rows, cols] pairs");
    c.hierarchy.clear();
    for (const auto& lvl : *h) {
      if (!lvl.is_array() || lvl.size() != 2 || !lvl[0].is_number_unsigned() || !lvl[1].is_number_unsigned())
        bad("hierarchy", "each level must be [rows, cols] with non-negative integers");
      c.hierarchy.push_back({lvl[0].get<uint32_t>(), lvl[1].get<uint32_t>()});
    }
  }
  root.get("seeds", c.seeds);
  root.get("output", c.output);
  root.get("generators", c.generators);

  const json* holder = nullptr;
  {
    Section s = root.child("growth", holder);
    auto& g = c.growth;
    s.get("p0_sector", g.p0_sector);
    s.get("p0_higher", g.p0_higher);
    s.get("alpha", g.alpha);
    s.get("beta", g.beta);
    s.get("delta", g.delta);
    s.get("lambda", g.lambda);
    s.get("n_min_chances", g.n_min_chances);
    s.get("xi", g.xi);
    s.get("n_win_per_level", c.n_win);
    s.get("l_min", g.l_min);
    bool reciprocal = g.reciprocal_higher != 0;
    s.get("reciprocal_higher", reciprocal);
    g.reciprocal_higher = reciprocal;
    s.finish();
  }
  {
    Section s = root.child("random", holder);
    s.get("n_edges", c.random.n_edges);
    s.finish();
  }
  {
    Section s = root.child("metrics", holder);
    auto& m = c.metrics;
    bool paths = m.paths, fits = m.fits, mode = m.fit_from_mode;
    s.get("paths", paths);
    s.get("fits", fits);
    s.get("threads", m.threads);
    s.get("fit_k_lo", m.fit_k_lo);
    s.get("fit_k_hi", m.fit_k_hi);
    s.get("bins_per_decade", m.bins_per_decade);
    s.get("fit_from_mode", mode);
    m.paths = paths;
    m.fits = fits;
    m.fit_from_mode = mode;
    s.finish();
  }
  {
    Section s = root.child("physical", holder);
    auto& p = c.physical;
    s.get("w_wg", p.w_wg);
    s.get("g_wg", p.g_wg);
    s.get("h_sine", p.h_sine);
    s.get("l_sine", p.l_sine);
    s.get("g_tap", p.g_tap);
    s.get("l_tap", p.l_tap);
    s.get("l_ipc", p.l_ipc);
    s.get("w_ipc", p.w_ipc);
    s.get("l_spd", p.l_spd);
    s.get("r_bend", p.r_bend);
    s.get("l_demux", p.l_demux);
    s.get("n_spd", p.n_spd);
    s.get("plane_pairs", p.plane_pairs);
    s.get("level_plane_pairs", c.level_plane_pairs);
    bool nitride = p.nitride_long_haul, nonlocal = p.allow_nonlocal;
    s.get("nitride_long_haul", nitride);
    s.get("allow_nonlocal", nonlocal);
    p.nitride_long_haul = nitride;
    p.allow_nonlocal = nonlocal;
    s.finish();
  }
  {
    Section s = root.child("power", holder);
    auto& p = c.power;
    s.get("planck_h", p.planck_h);
    s.get("nu", p.nu);
    s.get("eta", p.eta);
    s.get("zeta", p.zeta);
    s.get("chi", p.chi);
    s.get("n_fq", p.n_fq);
    s.get("i_c", p.i_c);
    s.get("phi0", p.phi0);
    s.get("gamma", p.gamma);
    s.get("mu", p.mu);
    s.get("k_min", p.k_min);
    s.get("k_max", p.k_max);
    s.get("f_min", p.f_min);
    s.get("f_max", p.f_max);
    s.get("static_power", p.static_power);
    s.finish();
  }
  {
    Section s = root.child("pool", holder);
    read_platform(s, "soen", c.pool.soen);
    read_platform(s, "brain", c.pool.brain);
    s.get("frequencies", c.pool.frequencies);
    s.finish();
  }
  {
    Section s = root.child("scaling", holder);
    s.get("gamma", c.scaling.gamma);
    s.get("k_min", c.scaling.k_min);
    s.finish();
  }
  if (const json* law = root.find("area_law"); law && !law->is_null()) {
    Section s(*law, "area_law");
    soenet_area_law l{0.0, 0.0, 3, 0.0};
    s.get("coefficient", l.coefficient);
    s.get("exponent", l.exponent);
    s.get("plane_pairs", l.plane_pairs);
    s.finish();
    c.area_law = l;
  }
  {
    Section s = root.child("sweep", holder);
    read_range(s, "n_tot", c.sweep.n_tot);
    s.get("plane_pairs", c.sweep.plane_pairs);
    read_range(s, "k0", c.sweep.k0);
    read_range(s, "frequency", c.sweep.frequency);
    read_range(s, "fig7_n_tot", c.sweep.fig7_n_tot);
    s.get("gammas", c.sweep.gammas);
    read_range(s, "eta", c.sweep.eta);
    s.finish();
  }
  {
    Section s = root.child("feedforward", holder);
    s.get("loss_db_per_m", c.loss_db_per_m);
    s.get("neurons_per_layer", c.feedforward_neurons);
    s.finish();
  }
  root.finish();
  c.bind();
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure(SOENET_IO_ERROR, "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  json doc;
  try {
    doc = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw Failure(SOENET_PARSE_ERROR, "config file '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

ordered_json RunConfig::to_json() const {
  ordered_json j;
  ordered_json h = ordered_json::array();
  for (const auto& l : hierarchy) h.push_back({l.rows, l.cols});
  j["hierarchy"] = h;
  j["seeds"] = seeds;
  j["output"] = output;
  j["generators"] = generators;
  j["growth"] = {{"p0_sector", growth.p0_sector}, {"p0_higher", growth.p0_higher}, {"alpha", growth.alpha},
                 {"beta", growth.beta},           {"delta", growth.delta},         {"lambda", growth.lambda},
                 {"n_min_chances", growth.n_min_chances}, {"xi", growth.xi},       {"n_win_per_level", n_win},
                 {"l_min", growth.l_min},         {"reciprocal_higher", growth.reciprocal_higher != 0}};
  j["random"] = {{"n_edges", random.n_edges}};
  j["metrics"] = {{"paths", metrics.paths != 0},       {"fits", metrics.fits != 0},
                  {"threads", metrics.threads},        {"fit_k_lo", metrics.fit_k_lo},
                  {"fit_k_hi", metrics.fit_k_hi},      {"bins_per_decade", metrics.bins_per_decade},
                  {"fit_from_mode", metrics.fit_from_mode != 0}};
  const auto& p = physical;
  j["physical"] = {{"w_wg", p.w_wg},   {"g_wg", p.g_wg},       {"h_sine", p.h_sine},
                   {"l_sine", p.l_sine}, {"g_tap", p.g_tap},   {"l_tap", p.l_tap},
                   {"l_ipc", p.l_ipc}, {"w_ipc", p.w_ipc},     {"l_spd", p.l_spd},
                   {"r_bend", p.r_bend}, {"l_demux", p.l_demux}, {"n_spd", p.n_spd},
                   {"plane_pairs", p.plane_pairs}, {"level_plane_pairs", level_plane_pairs},
                   {"nitride_long_haul", p.nitride_long_haul != 0}, {"allow_nonlocal", p.allow_nonlocal != 0}};
  const auto& w = power;
  j["power"] = {{"planck_h", w.planck_h}, {"nu", w.nu},       {"eta", w.eta},     {"zeta", w.zeta},
                {"chi", w.chi},           {"n_fq", w.n_fq},   {"i_c", w.i_c},     {"phi0", w.phi0},
                {"gamma", w.gamma},       {"mu", w.mu},       {"k_min", w.k_min}, {"k_max", w.k_max},
                {"f_min", w.f_min},       {"f_max", w.f_max}, {"static_power", w.static_power}};
  j["pool"] = {{"soen", {{"velocity", pool.soen.velocity}, {"width", pool.soen.width}}},
               {"brain", {{"velocity", pool.brain.velocity}, {"width", pool.brain.width}}},
               {"frequencies", pool.frequencies}};
  j["scaling"] = {{"gamma", scaling.gamma}, {"k_min", scaling.k_min}};
  if (area_law)
    j["area_law"] = {{"coefficient", area_law->coefficient},
                     {"exponent", area_law->exponent},
                     {"plane_pairs", area_law->plane_pairs}};
  else
    j["area_law"] = nullptr;
  j["sweep"] = {{"n_tot", range_json(sweep.n_tot)},       {"plane_pairs", sweep.plane_pairs},
                {"k0", range_json(sweep.k0)},             {"frequency", range_json(sweep.frequency)},
                {"fig7_n_tot", range_json(sweep.fig7_n_tot)}, {"gammas", sweep.gammas},
                {"eta", range_json(sweep.eta)}};
  j["feedforward"] = {{"loss_db_per_m", loss_db_per_m}, {"neurons_per_layer", feedforward_neurons}};
  return j;
}

}  // namespace cli

#include "soenet/report_io.hpp"

#include <cmath>

#include "json.hpp"

namespace soenet {

namespace {

using nlohmann::json;

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json stats_json(const DegreeStats& s) { return {{"min", s.min}, {"max", s.max}, {"mean", s.mean}}; }

json fit_json(const std::optional<PowerLawFit>& f) {
  if (!f) return nullptr;
  return {{"amplitude", number_or_null(f->amplitude)},
          {"gamma", number_or_null(f->gamma)},
          {"k_lo", f->k_lo},
          {"k_hi", f->k_hi},
          {"bins_used", f->bins_used},
          {"rms_log_residual", number_or_null(f->rms_log_residual)},
          {"mle_gamma", number_or_null(f->mle_gamma)}};
}

json histogram_json(std::span<const std::uint32_t> values) {
  json out = json::array();
  const auto h = histogram(values);
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k]) out.push_back({k, h[k]});
  return out;
}

}  // namespace

std::string metrics_to_json(const MetricsReport& r, const DegreeSummary* degrees) {
  json partitions = json::array();
  for (const auto& p : r.rent.partitions)
    partitions.push_back({{"level", p.level},
                          {"cell", p.cell},
                          {"nodes", p.nodes},
                          {"crossing_edges", p.crossing_edges},
                          {"exponent", number_or_null(p.exponent)}});
  json doc = {
      {"label", r.label},
      {"n_nodes", r.n_nodes},
      {"n_edges", r.n_edges},
      {"clustering", r.mean_clustering},
      {"paths",
       {{"mean", number_or_null(r.paths.mean)},
        {"reachable_pairs", r.paths.reachable_pairs},
        {"unreachable_pairs", r.paths.unreachable_pairs},
        {"diameter", r.paths.diameter}}},
      {"swi", r.swi ? number_or_null(*r.swi) : json(nullptr)},
      {"degrees", {{"in", stats_json(r.in_degree)}, {"out", stats_json(r.out_degree)}, {"total", stats_json(r.total_degree)}}},
      {"fits", {{"in", fit_json(r.in_fit)}, {"out", fit_json(r.out_fit)}}},
      {"census", r.census},
      {"rent",
       {{"exponent", number_or_null(r.rent.exponent)},
        {"dimension_bound", std::isnan(r.rent.dimension_bound)   ? json(nullptr)
                            : std::isinf(r.rent.dimension_bound) ? json("inf")
                                                                 : json(r.rent.dimension_bound)},
        {"partitions", partitions},
        {"warnings", r.rent.warnings}}},
  };
  if (degrees) {
    doc["histograms"] = {{"in", histogram_json(degrees->in)},
                         {"out", histogram_json(degrees->out)},
                         {"total", histogram_json(degrees->total)}};
  }
  return doc.dump() + "\n";
}

}  // namespace soenet

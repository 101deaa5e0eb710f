// Thin C++ conveniences over the public C interface. The CLI deliberately
// goes through soenet.h only, so everything here is header-only glue.
#pragma once

#include <soenet/soenet.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

class Failure : public std::runtime_error {
 public:
  Failure(soenet_status status, const std::string& message) : std::runtime_error(message), status_(status) {}
  soenet_status status() const noexcept { return status_; }

 private:
  soenet_status status_;
};

inline void check(soenet_status s, const std::string& context) {
  if (s == SOENET_OK) return;
  std::string msg = context + ": " + soenet_status_name(s);
  const char* detail = soenet_last_error();
  if (detail && *detail) msg += ": " + std::string(detail);
  throw Failure(s, msg);
}

struct GraphDeleter {
  void operator()(soenet_graph* g) const noexcept { soenet_graph_free(g); }
};
using Graph = std::unique_ptr<soenet_graph, GraphDeleter>;

inline Graph adopt(soenet_graph* g) { return Graph(g); }

/// Takes ownership of a library-allocated string.
inline std::string take_string(char* s) {
  if (!s) return {};
  std::string out(s);
  soenet_string_free(s);
  return out;
}

struct Degrees {
  std::vector<uint32_t> in, out, bilateral;
};

inline Degrees degrees_of(const soenet_graph* g) {
  const auto n = soenet_graph_n_nodes(g);
  Degrees d{std::vector<uint32_t>(n), std::vector<uint32_t>(n), std::vector<uint32_t>(n)};
  check(soenet_graph_degrees(g, d.in.data(), d.out.data(), d.bilateral.data(), n), "degrees");
  return d;
}

inline std::vector<soenet_grid> levels_of(const soenet_graph* g) {
  std::vector<soenet_grid> levels(soenet_graph_depth(g));
  for (size_t l = 0; l < levels.size(); ++l) check(soenet_graph_level(g, l, &levels[l]), "hierarchy level");
  return levels;
}

}  // namespace cli

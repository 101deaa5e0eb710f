#include "soenet/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "soenet/error.hpp"

namespace soenet {

using nlohmann::json;

std::string graph_to_json(const SpatialGraph& g) {
  json doc;
  doc["n_nodes"] = g.n_nodes();
  json levels = json::array();
  for (const auto& l : g.hierarchy().levels()) levels.push_back({l.rows, l.cols});
  doc["hierarchy"] = std::move(levels);
  json pos = json::array();
  for (NodeId i = 0; i < g.n_nodes(); ++i) {
    auto p = g.position(i);
    pos.push_back({p.x, p.y});
  }
  doc["positions"] = std::move(pos);
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.src, e.dst});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

SpatialGraph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph document: ") + e.what());
  }
  try {
    std::vector<GridDims> levels;
    for (const auto& l : doc.at("hierarchy")) {
      if (!l.is_array() || l.size() != 2) throw ParseError("graph document: hierarchy entries must be [rows, cols]");
      levels.push_back({l[0].get<std::uint32_t>(), l[1].get<std::uint32_t>()});
    }
    SpatialGraph g{HierarchySpec(std::move(levels))};
    const auto n = doc.at("n_nodes").get<std::uint64_t>();
    if (n != g.n_nodes()) throw ParseError("graph document: n_nodes disagrees with hierarchy");
    if (doc.contains("positions")) {
      const auto& pos = doc["positions"];
      if (pos.size() != n) throw ParseError("graph document: positions list has wrong length");
      for (NodeId i = 0; i < n; ++i) {
        GridPoint p{pos[i].at(0).get<std::int64_t>(), pos[i].at(1).get<std::int64_t>()};
        if (!(p == g.position(i)))
          throw ParseError("graph document: position of node " + std::to_string(i) +
                           " is inconsistent with the hierarchy");
      }
    }
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph document: edges must be [src, dst]");
      g.add_edge(e[0].get<NodeId>(), e[1].get<NodeId>());
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph document: ") + e.what());
  }
}

std::string graph_to_csv(const SpatialGraph& g) {
  std::string out = "src,dst\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.src);
    out += ',';
    out += std::to_string(e.dst);
    out += '\n';
  }
  return out;
}

SpatialGraph graph_from_csv(const std::string& text, const HierarchySpec& spec) {
  SpatialGraph g(spec);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.substr(0, 7) != "src,dst")
    throw ParseError("edge list: missing 'src,dst' header");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("edge list line " + std::to_string(lineno) + ": expected src,dst");
    try {
      g.add_edge(static_cast<NodeId>(std::stoul(line.substr(0, comma))),
                 static_cast<NodeId>(std::stoul(line.substr(comma + 1))));
    } catch (const std::logic_error&) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": bad integer");
    }
  }
  return g;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
  if (!f) throw IoError("write failed for " + path.string());
}

SpatialGraph load_graph(const std::filesystem::path& path) { return graph_from_json(read_text_file(path)); }

void save_graph_json(const std::filesystem::path& path, const SpatialGraph& g) {
  write_text_file(path, graph_to_json(g));
}

void save_graph_csv(const std::filesystem::path& path, const SpatialGraph& g) {
  write_text_file(path, graph_to_csv(g));
}

}  // namespace soenet

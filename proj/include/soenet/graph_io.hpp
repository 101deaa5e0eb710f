#pragma once

#include <filesystem>
#include <string>

#include "soenet/graph.hpp"

namespace soenet {

// Graph document:
//   {"n_nodes":N,"hierarchy":[[r,c],...],"positions":[[x,y],...],"edges":[[s,d],...]}
// Edges are written sorted, so output is byte-stable for a given graph.
std::string graph_to_json(const SpatialGraph& g);
SpatialGraph graph_from_json(const std::string& text);

/// "src,dst" header followed by one edge per line.
std::string graph_to_csv(const SpatialGraph& g);
SpatialGraph graph_from_csv(const std::string& text, const HierarchySpec& spec);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

SpatialGraph load_graph(const std::filesystem::path& path);
void save_graph_json(const std::filesystem::path& path, const SpatialGraph& g);
void save_graph_csv(const std::filesystem::path& path, const SpatialGraph& g);

}  // namespace soenet

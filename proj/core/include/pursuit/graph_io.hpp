#pragma once

#include <cstdint>
#include <string>

#include "pursuit/graph.hpp"

namespace pursuit {

// {"vertices":[{"id":int,"label":string}],"edges":[[int,int]]}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

// FNV-1a over the canonical JSON form; identifies a graph in exported files.
std::uint64_t graph_hash(const Graph& g);

}  // namespace pursuit

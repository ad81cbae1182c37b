#include "pursuit/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pursuit/error.hpp"

namespace pursuit {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
  json vertices = json::array();
  for (std::size_t v = 0; v < g.order(); ++v) {
    vertices.push_back({{"id", v}, {"label", to_string(g.label(static_cast<Vertex>(v)))}});
  }
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"vertices", vertices}, {"edges", edges}}.dump();
}

Graph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("graph JSON does not parse: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw GraphError("graph JSON needs 'vertices' and 'edges'");
  }
  const auto& vs = doc.at("vertices");
  std::vector<VertexLabel> labels(vs.size());
  std::vector<char> seen(vs.size(), 0);
  try {
    for (const auto& entry : vs) {
      const auto id = entry.at("id").get<long long>();
      if (id < 0 || static_cast<std::size_t>(id) >= vs.size() || seen[id]) {
        throw GraphError("vertex ids must be a permutation of 0..n-1");
      }
      seen[id] = 1;
      labels[id] = parse_label(entry.at("label").get<std::string>());
    }
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError("each edge must be a pair of vertex ids");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return Graph(std::move(labels), std::move(edges));
  } catch (const json::exception& e) {
    throw GraphError(std::string("graph JSON has the wrong shape: ") + e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write graph file '" + path + "'");
  out << graph_to_json(g) << '\n';
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : graph_to_json(g)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace pursuit

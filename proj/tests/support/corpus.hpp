#pragma once

#include <random>
#include <string>
#include <vector>

#include "pursuit/design.hpp"
#include "pursuit/families.hpp"
#include "pursuit/graph.hpp"

namespace pursuit::fixtures {

struct Named {
  std::string name;
  Graph graph;
};

inline Graph from_edges(int n, const std::vector<Edge>& edges) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(VertexLabel::anon(i));
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return from_edges(10, e);
}

// Connected: a random spanning tree plus extra edges.
inline Graph random_connected(int n, int extra, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    const int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    bool dup = false;
    for (auto [x, y] : e) dup = dup || (x == a && y == b) || (x == b && y == a);
    if (!dup) e.push_back({a, b});
  }
  return from_edges(n, e);
}

// Connected graphs with at most 10 vertices.
inline std::vector<Named> small_corpus() {
  std::vector<Named> out;
  for (int n = 1; n <= 5; ++n) out.push_back({"K" + std::to_string(n), build_complete(n)});
  for (int n = 2; n <= 6; ++n) out.push_back({"P" + std::to_string(n), build_path(n)});
  for (int n = 3; n <= 8; ++n) out.push_back({"C" + std::to_string(n), build_cycle(n)});
  out.push_back({"Q2", build_hypercube(2)});
  out.push_back({"Q3", build_hypercube(3)});
  out.push_back({"star5", from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})});
  out.push_back({"K23", from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})});
  out.push_back({"petersen", petersen()});
  out.push_back({"octahedron", block_intersection_graph(construct_pair_design(4))});
  out.push_back({"arm0+K1", attach(build_complete(1), build_arm(0), 0, 0)});
  for (std::uint32_t seed = 1; seed <= 8; ++seed) {
    const int n = 5 + static_cast<int>(seed % 5);
    out.push_back({"random" + std::to_string(seed), random_connected(n, static_cast<int>(seed % 4) + 1, seed)});
  }
  return out;
}

// Up to 30 vertices.
inline std::vector<Named> medium_corpus() {
  std::vector<Named> out = small_corpus();
  out.push_back({"G5", build_G5()});
  out.push_back({"Q4", build_hypercube(4)});
  out.push_back({"T", build_T(0)});
  out.push_back({"arm1", build_arm(1)});
  out.push_back({"arm2", build_arm(2)});
  out.push_back({"sts9", block_intersection_graph(construct_sts(9))});
  out.push_back({"C12", build_cycle(12)});
  return out;
}

}  // namespace pursuit::fixtures

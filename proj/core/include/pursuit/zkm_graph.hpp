#pragma once

#include <optional>
#include <vector>

#include "pursuit/design.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

// ZC_k with, at every base vertex, one path of length 4(m-k) and m arms of
// length 4(m-k). Base vertices come first (ids 0..|ZC_k|-1); then, per base
// vertex, its path followed by its m arms.
Graph build_Z(int k, int m, const std::optional<Design>& design = std::nullopt);

// Recovers the structure of a build_Z graph from its labels.
struct ZkmLayout {
  struct Hang {
    int copy;
    Vertex base;    // base vertex the hang is attached to
    Vertex root;    // path:1 or out:2:-1
    bool is_path;
  };

  int arm_length = 0;
  std::vector<Vertex> base;        // base vertices, ascending
  std::vector<char> is_base;       // per vertex
  std::vector<int> hang_of;        // per vertex: index into hangs, -1 for base vertices
  std::vector<Vertex> projection;  // per vertex: nearest base vertex
  std::vector<Hang> hangs;

  explicit ZkmLayout(const Graph& g);

  // In ZC_k or adjacent to it.
  bool touches(const Graph& g, Vertex v) const;
  // Arms (hang indices) attached at base vertex b, in build order.
  std::vector<int> arms_at(Vertex b) const;
  int path_at(Vertex b) const;  // hang index or -1 when paths are empty
};

}  // namespace pursuit

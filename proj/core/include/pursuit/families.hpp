#pragma once

#include <optional>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

// The 11-vertex gadget: inside ring in:0..4, outside ring out:0..4, hub.
// Vertex order is in:0..4, out:0..4, hub.
Graph build_T(int x);

// Arm graph with n gadget copies: out:2:-1, T_0 .. T_{n-1}, out:0:n.
Graph build_arm(int n);

// Path v_1 .. v_n labeled path:1 .. path:n. n = 0 gives the empty graph.
Graph build_path(int n);

// n-dimensional hypercube; vertex id equals the bit vector read with
// coordinate 1 as the most significant bit.
Graph build_hypercube(int n);

// 15 vertices in three rings of five: K_5 inside, two 5-cycles around it,
// with spokes and the +-1 cross diagonals between consecutive rings.
Graph build_G5();

Graph build_complete(int n);
Graph build_cycle(int n);

// Vertex positions inside one arm of a composite graph, addressed by the
// labels build_arm() assigns. Everything outside the arm is "H".
class ArmView {
 public:
  struct Spot {
    LabelKind kind;  // ArmIn, ArmOut or Hub
    int ring;
    int x;
  };

  ArmView(const Graph& g, int copy);

  // Copy tags of every arm present in g, ascending.
  static std::vector<int> copies(const Graph& g);

  const Graph& graph() const { return *g_; }
  int copy() const { return copy_; }
  int length() const { return n_; }

  Vertex in(int ring, int x) const { return in_[x * 5 + ring]; }
  Vertex out(int ring, int x) const;  // x in -1..n (out:2:-1 and out:0:n included)
  Vertex hub(int x) const { return hub_[x]; }
  Vertex root() const { return root_; }          // out:2:-1
  Vertex end() const { return end_; }            // out:0:n
  // Neighbor of the root outside the arm, or -1 if the arm stands alone.
  Vertex attachment() const { return attachment_; }

  bool contains(Vertex v) const { return member_[v] != 0; }
  std::optional<Spot> locate(Vertex v) const;
  bool is(Vertex v, LabelKind kind, int ring, int x) const;

  // Which gadget copy v lies in: 0..n-1 for T_x, -1 for the root, n for the
  // end vertex, nullopt outside the arm.
  std::optional<int> block_of(Vertex v) const;

  // True when v is in H, at the root, or in T_0 .. T_{x-1}.
  bool behind(Vertex v, int x) const;

 private:
  const Graph* g_;
  int copy_;
  int n_ = 0;
  std::vector<Vertex> in_, out_, hub_;
  Vertex root_ = -1, end_ = -1, attachment_ = -1;
  std::vector<char> member_;
};

}  // namespace pursuit

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pursuit {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class LabelKind : std::uint8_t { ArmIn, ArmOut, Hub, PathNode, Base, CubeVec, Anon };

// Symbolic name of a vertex. `copy` separates repeated components (several
// arms hanging off one base graph, say) and is assigned by attach().
struct VertexLabel {
  LabelKind kind = LabelKind::Anon;
  int ring = 0;             // ArmIn / ArmOut: 0..4
  int index = 0;            // copy index x, path position, block id or anon id
  std::uint64_t bits = 0;   // CubeVec: coordinate 1 is the most significant bit
  int width = 0;            // CubeVec: dimension
  int copy = 0;

  static VertexLabel arm_in(int ring, int x, int copy = 0);
  static VertexLabel arm_out(int ring, int x, int copy = 0);
  static VertexLabel hub(int x, int copy = 0);
  static VertexLabel path(int j, int copy = 0);
  static VertexLabel base(int block, int copy = 0);
  static VertexLabel cube(std::uint64_t bits, int width, int copy = 0);
  static VertexLabel anon(int id, int copy = 0);

  VertexLabel with_copy(int c) const {
    VertexLabel out = *this;
    out.copy = c;
    return out;
  }

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

struct VertexLabelHash {
  std::size_t operator()(const VertexLabel& l) const noexcept;
};

// "in:i:x", "out:i:x", "hub:x", "path:j", "base:b", "cube:0101", "anon:id",
// with an "@copy" suffix when copy != 0.
std::string to_string(const VertexLabel& label);
VertexLabel parse_label(std::string_view text);

// Immutable finite simple graph with labeled vertices and a precomputed
// all-pairs hop-distance table.
class Graph {
 public:
  static constexpr int kUnreachable = 0xFFFF;

  Graph() = default;
  Graph(std::vector<VertexLabel> labels, std::vector<Edge> edges);

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return targets_.size() / 2; }
  bool valid(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < order(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  int max_degree() const;

  int distance(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * order() + v]; }
  bool adjacent(Vertex u, Vertex v) const { return u != v && distance(u, v) == 1; }
  bool connected() const { return connected_; }
  // Largest finite distance; throws DisconnectedGraph when not connected.
  int diameter() const;

  const VertexLabel& label(Vertex v) const { return labels_[v]; }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  std::optional<Vertex> find(const VertexLabel& label) const;
  Vertex at(const VertexLabel& label) const;
  int max_copy() const;

  // Edges (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<std::uint16_t> dist_;
  std::unordered_map<VertexLabel, Vertex, VertexLabelHash> index_;
  bool connected_ = true;
};

// Incremental construction helper; the Graph itself never mutates.
class GraphBuilder {
 public:
  Vertex add_vertex(const VertexLabel& label);
  void add_edge(Vertex u, Vertex v);
  // Copies `g` in, shifting its copy tags by `copy_offset`. Returns the id of
  // g's vertex 0 in the builder.
  Vertex add_graph(const Graph& g, int copy_offset);
  std::size_t order() const { return labels_.size(); }
  Graph build() &&;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<Edge> edges_;
};

// Row-major hop-distance table; throws DisconnectedGraph if any pair is
// unreachable.
std::vector<int> all_pairs_distances(const Graph& g);

// Disjoint union of g and h plus the edge u-v (u in g, v in h). h's copy tags
// are shifted past g's so that labels stay unique. Attaching an empty h is a
// no-op.
Graph attach(const Graph& g, const Graph& h, Vertex u, Vertex v);

// n mod r in [0, r).
int mod_residue(long long n, long long r);

}  // namespace pursuit

#include "pursuit/families.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "pursuit/error.hpp"

namespace pursuit {

namespace {

// Appends the vertices and edges of T_x to the builder; returns the id of in:0:x.
Vertex add_gadget(GraphBuilder& b, int x) {
  const Vertex first = static_cast<Vertex>(b.order());
  for (int i = 0; i < 5; ++i) b.add_vertex(VertexLabel::arm_in(i, x));
  for (int i = 0; i < 5; ++i) b.add_vertex(VertexLabel::arm_out(i, x));
  const Vertex c = b.add_vertex(VertexLabel::hub(x));
  auto in = [first](int i) { return first + i; };
  auto out = [first](int i) { return first + 5 + i; };
  for (int i = 0; i < 5; ++i) {
    const int j = (i + 1) % 5;  // |i - j| is 1 or 4
    b.add_edge(in(i), in(j));
    b.add_edge(out(i), out(j));
    b.add_edge(in(i), out(j));
    b.add_edge(out(i), in(j));
    b.add_edge(in(i), out(i));
    b.add_edge(in(i), c);
  }
  return first;
}

}  // namespace

Graph build_T(int x) {
  if (x < 0) throw GraphError("gadget copy index must be non-negative");
  GraphBuilder b;
  add_gadget(b, x);
  return std::move(b).build();
}

Graph build_arm(int n) {
  if (n < 0) throw GraphError("arm length must be >= 0, got " + std::to_string(n));
  GraphBuilder b;
  Vertex prev_exit = b.add_vertex(VertexLabel::arm_out(2, -1));
  for (int x = 0; x < n; ++x) {
    const Vertex first = add_gadget(b, x);
    b.add_edge(prev_exit, first + 5);  // out:2:(x-1) -- out:0:x
    prev_exit = first + 5 + 2;
  }
  const Vertex end = b.add_vertex(VertexLabel::arm_out(0, n));
  b.add_edge(prev_exit, end);
  return std::move(b).build();
}

Graph build_path(int n) {
  if (n < 0) throw GraphError("path length must be >= 0, got " + std::to_string(n));
  GraphBuilder b;
  for (int j = 1; j <= n; ++j) b.add_vertex(VertexLabel::path(j));
  for (int j = 0; j + 1 < n; ++j) b.add_edge(j, j + 1);
  return std::move(b).build();
}

Graph build_hypercube(int n) {
  if (n < 1 || n > 15) throw GraphError("hypercube dimension must be in 1..15, got " + std::to_string(n));
  GraphBuilder b;
  const Vertex count = Vertex{1} << n;
  for (Vertex v = 0; v < count; ++v) b.add_vertex(VertexLabel::cube(static_cast<std::uint64_t>(v), n));
  for (Vertex v = 0; v < count; ++v) {
    for (int bit = 0; bit < n; ++bit) {
      const Vertex w = v ^ (Vertex{1} << bit);
      if (v < w) b.add_edge(v, w);
    }
  }
  return std::move(b).build();
}

Graph build_G5() {
  GraphBuilder b;
  for (int id = 0; id < 15; ++id) b.add_vertex(VertexLabel::anon(id));
  auto ring = [](int r, int i) { return static_cast<Vertex>(r * 5 + ((i % 5) + 5) % 5); };
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) b.add_edge(ring(0, i), ring(0, j));
    b.add_edge(ring(1, i), ring(1, i + 1));
    b.add_edge(ring(2, i), ring(2, i + 1));
    b.add_edge(ring(0, i), ring(1, i));
    b.add_edge(ring(1, i), ring(2, i));
    b.add_edge(ring(0, i), ring(1, i + 1));
    b.add_edge(ring(1, i), ring(0, i + 1));
    b.add_edge(ring(1, i), ring(2, i + 1));
    b.add_edge(ring(2, i), ring(1, i + 1));
  }
  return std::move(b).build();
}

Graph build_complete(int n) {
  if (n < 1) throw GraphError("complete graph needs at least one vertex");
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(VertexLabel::anon(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

Graph build_cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least three vertices");
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(VertexLabel::anon(i));
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

ArmView::ArmView(const Graph& g, int copy) : g_(&g), copy_(copy), member_(g.order(), 0) {
  const auto root = g.find(VertexLabel::arm_out(2, -1, copy));
  if (!root) throw GraphError("graph has no arm with copy tag " + std::to_string(copy));
  root_ = *root;
  while (g.find(VertexLabel::hub(n_, copy))) ++n_;
  end_ = g.at(VertexLabel::arm_out(0, n_, copy));
  in_.resize(static_cast<std::size_t>(n_) * 5);
  out_.resize(static_cast<std::size_t>(n_) * 5);
  hub_.resize(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    for (int i = 0; i < 5; ++i) {
      in_[x * 5 + i] = g.at(VertexLabel::arm_in(i, x, copy));
      out_[x * 5 + i] = g.at(VertexLabel::arm_out(i, x, copy));
      member_[in_[x * 5 + i]] = 1;
      member_[out_[x * 5 + i]] = 1;
    }
    hub_[x] = g.at(VertexLabel::hub(x, copy));
    member_[hub_[x]] = 1;
  }
  member_[root_] = 1;
  member_[end_] = 1;
  for (Vertex w : g.neighbors(root_)) {
    if (!member_[w]) attachment_ = w;
  }
}

std::vector<int> ArmView::copies(const Graph& g) {
  std::set<int> found;
  for (const auto& l : g.labels()) {
    if (l.kind == LabelKind::ArmOut && l.ring == 2 && l.index == -1) found.insert(l.copy);
  }
  return {found.begin(), found.end()};
}

Vertex ArmView::out(int ring, int x) const {
  if (x == -1) {
    if (ring != 2) throw GraphError("out:" + std::to_string(ring) + ":-1 does not exist");
    return root_;
  }
  if (x == n_) {
    if (ring != 0) throw GraphError("only out:0:n exists at the end of an arm");
    return end_;
  }
  return out_[x * 5 + ring];
}

std::optional<ArmView::Spot> ArmView::locate(Vertex v) const {
  if (!g_->valid(v) || !member_[v]) return std::nullopt;
  const auto& l = g_->label(v);
  return Spot{l.kind, l.ring, l.index};
}

bool ArmView::is(Vertex v, LabelKind kind, int ring, int x) const {
  if (!g_->valid(v) || !member_[v]) return false;
  const auto& l = g_->label(v);
  return l.kind == kind && l.ring == ring && l.index == x;
}

std::optional<int> ArmView::block_of(Vertex v) const {
  if (!g_->valid(v) || !member_[v]) return std::nullopt;
  if (v == root_) return -1;
  if (v == end_) return n_;
  return g_->label(v).index;
}

bool ArmView::behind(Vertex v, int x) const {
  const auto b = block_of(v);
  return !b || *b < x;
}

}  // namespace pursuit

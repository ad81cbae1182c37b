#include "pursuit/zkm_graph.hpp"

#include <algorithm>

#include "pursuit/error.hpp"
#include "pursuit/families.hpp"

namespace pursuit {

Graph build_Z(int k, int m, const std::optional<Design>& design) {
  if (k < 1 || m < k) throw GraphError("Z_{k,m} needs m >= k >= 1");
  const Graph base = build_ZC(k, design);
  const int len = 4 * (m - k);
  const Graph path = build_path(len);
  const Graph arm = build_arm(len);

  GraphBuilder b;
  b.add_graph(base, 0);
  int copy = 1;
  for (std::size_t v = 0; v < base.order(); ++v) {
    if (len > 0) {
      const Vertex first = b.add_graph(path, copy++);
      b.add_edge(static_cast<Vertex>(v), first);
    }
    for (int a = 0; a < m; ++a) {
      const Vertex root = b.add_graph(arm, copy++);  // out:2:-1 is vertex 0 of build_arm
      b.add_edge(static_cast<Vertex>(v), root);
    }
  }
  return std::move(b).build();
}

ZkmLayout::ZkmLayout(const Graph& g)
    : is_base(g.order(), 0), hang_of(g.order(), -1), projection(g.order(), -1) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto& l = g.label(static_cast<Vertex>(v));
    if (l.kind == LabelKind::Base && l.copy == 0) {
      is_base[v] = 1;
      base.push_back(static_cast<Vertex>(v));
      projection[v] = static_cast<Vertex>(v);
    }
  }
  if (base.empty()) throw GraphError("graph has no base vertices; not a Z_{k,m} graph");

  std::vector<int> hang_by_copy(static_cast<std::size_t>(g.max_copy()) + 1, -1);
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto& l = g.label(static_cast<Vertex>(v));
    const bool path_root = l.kind == LabelKind::PathNode && l.index == 1;
    const bool arm_root = l.kind == LabelKind::ArmOut && l.ring == 2 && l.index == -1;
    if (!path_root && !arm_root) continue;
    Vertex attach = -1;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (is_base[w]) attach = w;
    }
    if (attach < 0) throw GraphError("hang root " + to_string(l) + " is not attached to a base vertex");
    hang_by_copy[l.copy] = static_cast<int>(hangs.size());
    hangs.push_back({l.copy, attach, static_cast<Vertex>(v), path_root});
  }
  std::sort(hangs.begin(), hangs.end(), [](const Hang& a, const Hang& b) { return a.copy < b.copy; });
  for (std::size_t h = 0; h < hangs.size(); ++h) hang_by_copy[hangs[h].copy] = static_cast<int>(h);

  for (std::size_t v = 0; v < g.order(); ++v) {
    if (is_base[v]) continue;
    const int h = hang_by_copy[g.label(static_cast<Vertex>(v)).copy];
    if (h < 0) throw GraphError("vertex " + to_string(g.label(static_cast<Vertex>(v))) + " belongs to no hang");
    hang_of[v] = h;
    projection[v] = hangs[h].base;
  }
  for (const auto& h : hangs) {
    if (!h.is_path) arm_length = ArmView(g, h.copy).length();
  }
}

bool ZkmLayout::touches(const Graph& g, Vertex v) const {
  if (is_base[v]) return true;
  for (Vertex w : g.neighbors(v)) {
    if (is_base[w]) return true;
  }
  return false;
}

std::vector<int> ZkmLayout::arms_at(Vertex b) const {
  std::vector<int> out;
  for (std::size_t h = 0; h < hangs.size(); ++h) {
    if (hangs[h].base == b && !hangs[h].is_path) out.push_back(static_cast<int>(h));
  }
  return out;
}

int ZkmLayout::path_at(Vertex b) const {
  for (std::size_t h = 0; h < hangs.size(); ++h) {
    if (hangs[h].base == b && hangs[h].is_path) return static_cast<int>(h);
  }
  return -1;
}

}  // namespace pursuit

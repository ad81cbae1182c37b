#include "pursuit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>

#include "pursuit/error.hpp"

namespace pursuit {

namespace {

void check_ring(int ring) {
  if (ring < 0 || ring > 4) throw GraphError("ring index must be in 0..4, got " + std::to_string(ring));
}

void check_copy(int copy) {
  if (copy < 0) throw GraphError("copy tag must be non-negative");
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw GraphError("malformed vertex label '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

VertexLabel VertexLabel::arm_in(int ring, int x, int copy) {
  check_ring(ring);
  check_copy(copy);
  if (x < 0) throw GraphError("inside arm vertices need a non-negative copy index");
  return {LabelKind::ArmIn, ring, x, 0, 0, copy};
}

VertexLabel VertexLabel::arm_out(int ring, int x, int copy) {
  check_ring(ring);
  check_copy(copy);
  if (x < -1 || (x == -1 && ring != 2)) {
    throw GraphError("copy index -1 is only valid for out:2:-1");
  }
  return {LabelKind::ArmOut, ring, x, 0, 0, copy};
}

VertexLabel VertexLabel::hub(int x, int copy) {
  check_copy(copy);
  if (x < 0) throw GraphError("hub copy index must be non-negative");
  return {LabelKind::Hub, 0, x, 0, 0, copy};
}

VertexLabel VertexLabel::path(int j, int copy) {
  check_copy(copy);
  if (j < 0) throw GraphError("path position must be non-negative");
  return {LabelKind::PathNode, 0, j, 0, 0, copy};
}

VertexLabel VertexLabel::base(int block, int copy) {
  check_copy(copy);
  if (block < 0) throw GraphError("block id must be non-negative");
  return {LabelKind::Base, 0, block, 0, 0, copy};
}

VertexLabel VertexLabel::cube(std::uint64_t bits, int width, int copy) {
  check_copy(copy);
  if (width < 1 || width > 63) throw GraphError("cube label width must be in 1..63");
  if (bits >> width) throw GraphError("cube label bits exceed its width");
  return {LabelKind::CubeVec, 0, 0, bits, width, copy};
}

VertexLabel VertexLabel::anon(int id, int copy) {
  check_copy(copy);
  if (id < 0) throw GraphError("anonymous id must be non-negative");
  return {LabelKind::Anon, 0, id, 0, 0, copy};
}

std::size_t VertexLabelHash::operator()(const VertexLabel& l) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(l.kind));
  mix(static_cast<std::uint64_t>(l.ring));
  mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(l.index)));
  mix(l.bits);
  mix(static_cast<std::uint64_t>(l.width));
  mix(static_cast<std::uint64_t>(l.copy));
  return static_cast<std::size_t>(h);
}

std::string to_string(const VertexLabel& l) {
  std::string out;
  switch (l.kind) {
    case LabelKind::ArmIn:
      out = "in:" + std::to_string(l.ring) + ":" + std::to_string(l.index);
      break;
    case LabelKind::ArmOut:
      out = "out:" + std::to_string(l.ring) + ":" + std::to_string(l.index);
      break;
    case LabelKind::Hub:
      out = "hub:" + std::to_string(l.index);
      break;
    case LabelKind::PathNode:
      out = "path:" + std::to_string(l.index);
      break;
    case LabelKind::Base:
      out = "base:" + std::to_string(l.index);
      break;
    case LabelKind::CubeVec:
      out = "cube:";
      for (int i = l.width - 1; i >= 0; --i) out.push_back(((l.bits >> i) & 1u) ? '1' : '0');
      break;
    case LabelKind::Anon:
      out = "anon:" + std::to_string(l.index);
      break;
  }
  if (l.copy != 0) out += "@" + std::to_string(l.copy);
  return out;
}

VertexLabel parse_label(std::string_view text) {
  int copy = 0;
  std::string_view core = text;
  if (auto at = text.find('@'); at != std::string_view::npos) {
    copy = parse_int(text.substr(at + 1), text);
    core = text.substr(0, at);
  }
  auto parts = split(core, ':');
  const std::string_view kind = parts[0];
  auto expect = [&](std::size_t n) {
    if (parts.size() != n) throw GraphError("malformed vertex label '" + std::string(text) + "'");
  };
  if (kind == "in") {
    expect(3);
    return VertexLabel::arm_in(parse_int(parts[1], text), parse_int(parts[2], text), copy);
  }
  if (kind == "out") {
    expect(3);
    return VertexLabel::arm_out(parse_int(parts[1], text), parse_int(parts[2], text), copy);
  }
  if (kind == "hub") {
    expect(2);
    return VertexLabel::hub(parse_int(parts[1], text), copy);
  }
  if (kind == "path") {
    expect(2);
    return VertexLabel::path(parse_int(parts[1], text), copy);
  }
  if (kind == "base") {
    expect(2);
    return VertexLabel::base(parse_int(parts[1], text), copy);
  }
  if (kind == "anon") {
    expect(2);
    return VertexLabel::anon(parse_int(parts[1], text), copy);
  }
  if (kind == "cube") {
    expect(2);
    const std::string_view digits = parts[1];
    if (digits.empty() || digits.size() > 63) throw GraphError("malformed cube label '" + std::string(text) + "'");
    std::uint64_t bits = 0;
    for (char c : digits) {
      if (c != '0' && c != '1') throw GraphError("malformed cube label '" + std::string(text) + "'");
      bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return VertexLabel::cube(bits, static_cast<int>(digits.size()), copy);
  }
  throw GraphError("unknown vertex label kind in '" + std::string(text) + "'");
}

Graph::Graph(std::vector<VertexLabel> labels, std::vector<Edge> edges) : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n >= static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) throw GraphError("graph too large");

  index_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[v], static_cast<Vertex>(v)).second) {
      throw GraphError("duplicate vertex label '" + to_string(labels_[v]) + "'");
    }
  }

  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw GraphError("edge endpoint out of range");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw GraphError("duplicate edge");

  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  targets_.resize(offsets_[n]);
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    targets_[fill[u]++] = v;
    targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);

  if (n > 40000) throw GraphError("graph too large for a dense distance table");
  dist_.assign(n * n, static_cast<std::uint16_t>(kUnreachable));
  std::vector<Vertex> queue(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::uint16_t* row = dist_.data() + s * n;
    std::size_t head = 0, tail = 0;
    row[s] = 0;
    queue[tail++] = static_cast<Vertex>(s);
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex w : neighbors(u)) {
        if (row[w] == kUnreachable) {
          row[w] = static_cast<std::uint16_t>(row[u] + 1);
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) connected_ = false;
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (std::size_t v = 0; v < order(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

int Graph::diameter() const {
  if (!connected_) throw DisconnectedGraph();
  int best = 0;
  for (auto d : dist_) best = std::max(best, static_cast<int>(d));
  return best;
}

std::optional<Vertex> Graph::find(const VertexLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::at(const VertexLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw GraphError("no vertex labeled '" + to_string(label) + "'");
  return it->second;
}

int Graph::max_copy() const {
  int best = 0;
  for (const auto& l : labels_) best = std::max(best, l.copy);
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (std::size_t u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(static_cast<Vertex>(u))) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

Vertex GraphBuilder::add_vertex(const VertexLabel& label) {
  labels_.push_back(label);
  return static_cast<Vertex>(labels_.size() - 1);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

Vertex GraphBuilder::add_graph(const Graph& g, int copy_offset) {
  const Vertex base = static_cast<Vertex>(labels_.size());
  for (const auto& l : g.labels()) labels_.push_back(l.with_copy(l.copy + copy_offset));
  for (const auto& [u, v] : g.edges()) edges_.emplace_back(base + u, base + v);
  return base;
}

Graph GraphBuilder::build() && { return Graph(std::move(labels_), std::move(edges_)); }

std::vector<int> all_pairs_distances(const Graph& g) {
  if (!g.connected()) throw DisconnectedGraph();
  const std::size_t n = g.order();
  std::vector<int> out(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) out[u * n + v] = g.distance(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return out;
}

Graph attach(const Graph& g, const Graph& h, Vertex u, Vertex v) {
  if (h.order() == 0) return g;
  if (!g.valid(u)) throw GraphError("attach: vertex " + std::to_string(u) + " is not in the first graph");
  if (!h.valid(v)) throw GraphError("attach: vertex " + std::to_string(v) + " is not in the second graph");
  GraphBuilder b;
  b.add_graph(g, 0);
  const Vertex base = b.add_graph(h, g.max_copy() + 1);
  b.add_edge(u, base + v);
  return std::move(b).build();
}

int mod_residue(long long n, long long r) {
  if (r <= 0) throw GraphError("modulus must be positive, got " + std::to_string(r));
  long long m = n % r;
  if (m < 0) m += r;
  return static_cast<int>(m);
}

}  // namespace pursuit

#include "pursuit/design.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pursuit/error.hpp"

namespace pursuit {

BibdReport validate_bibd(const Design& d) {
  auto fail = [](std::string why) { return BibdReport{false, std::move(why)}; };
  if (d.v < 2) return fail("need at least two points");
  if (d.k < 2 || d.k > d.v) return fail("block size k must be in 2..v");
  if (d.lambda < 1) return fail("lambda must be positive");
  if (d.blocks.empty()) return fail("design has no blocks");

  const auto v = static_cast<std::size_t>(d.v);
  std::vector<int> pair_count(v * v, 0);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& block = d.blocks[b];
    const std::string where = "block " + std::to_string(b);
    if (static_cast<int>(block.size()) != d.k) {
      return fail(where + " has " + std::to_string(block.size()) + " points, expected " + std::to_string(d.k));
    }
    for (int p : block) {
      if (p < 0 || p >= d.v) return fail(where + " contains point " + std::to_string(p) + " outside 0..v-1");
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (block[i] == block[j]) return fail(where + " repeats point " + std::to_string(block[i]));
        const auto lo = static_cast<std::size_t>(std::min(block[i], block[j]));
        const auto hi = static_cast<std::size_t>(std::max(block[i], block[j]));
        ++pair_count[lo * v + hi];
      }
    }
  }
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      if (pair_count[a * v + b] != d.lambda) {
        return fail("pair {" + std::to_string(a) + "," + std::to_string(b) + "} lies in " +
                    std::to_string(pair_count[a * v + b]) + " blocks, expected " + std::to_string(d.lambda));
      }
    }
  }
  return {true, {}};
}

void canonicalize(Design& d) {
  for (auto& block : d.blocks) std::sort(block.begin(), block.end());
  std::sort(d.blocks.begin(), d.blocks.end());
}

Design construct_pair_design(int v) {
  if (v < 2) throw DesignError("pair design needs v >= 2, got " + std::to_string(v));
  Design d{v, 2, 1, {}};
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) d.blocks.push_back({a, b});
  return d;
}

namespace {

// Bose: v = 6t + 3 on Z_n x {0,1,2}, n = 2t + 1, with the idempotent
// commutative quasigroup x o y = (x + y)(n + 1)/2 mod n.
Design bose_sts(int v) {
  const int n = v / 3;
  const int half = (n + 1) / 2;
  auto pt = [n](int x, int i) { return x + n * (i % 3); };
  Design d{v, 3, 1, {}};
  for (int x = 0; x < n; ++x) d.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        const int z = ((x + y) * half) % n;
        d.blocks.push_back({pt(x, i), pt(y, i), pt(z, i + 1)});
      }
    }
  }
  return d;
}

// Skolem: v = 6t + 1 on {inf} + Z_2t x {0,1,2}, with the half-idempotent
// commutative quasigroup obtained by relabeling the addition table of Z_2t.
Design skolem_sts(int v) {
  const int t = (v - 1) / 6;
  const int n = 2 * t;
  auto op = [n, t](int x, int y) {
    const int s = (x + y) % n;
    return s % 2 == 0 ? s / 2 : t + (s - 1) / 2;
  };
  auto pt = [n](int x, int i) { return x + n * (i % 3); };
  const int inf = 3 * n;
  Design d{v, 3, 1, {}};
  for (int x = 0; x < t; ++x) d.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < t; ++x) d.blocks.push_back({inf, pt(x + t, i), pt(x, i + 1)});
  }
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) d.blocks.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
    }
  }
  return d;
}

}  // namespace

Design construct_sts(int v) {
  if (v < 7 || (v % 6 != 1 && v % 6 != 3)) {
    throw DesignError("a Steiner triple system needs v = 1 or 3 (mod 6) and v >= 7, got " + std::to_string(v));
  }
  Design d = v % 6 == 3 ? bose_sts(v) : skolem_sts(v);
  canonicalize(d);
  if (auto report = validate_bibd(d); !report) {
    throw DesignError("internal STS construction failed: " + report.violation);
  }
  return d;
}

Graph block_intersection_graph(const Design& d) {
  if (auto report = validate_bibd(d); !report) throw DesignError("invalid design: " + report.violation);
  const std::size_t b = d.blocks.size();
  std::vector<std::vector<char>> has(b, std::vector<char>(static_cast<std::size_t>(d.v), 0));
  for (std::size_t i = 0; i < b; ++i)
    for (int p : d.blocks[i]) has[i][p] = 1;
  GraphBuilder g;
  for (std::size_t i = 0; i < b; ++i) g.add_vertex(VertexLabel::base(static_cast<int>(i)));
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) {
      const bool meet = std::any_of(d.blocks[j].begin(), d.blocks[j].end(), [&](int p) { return has[i][p]; });
      if (meet) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return std::move(g).build();
}

Design canonical_ZC_design(int k) {
  switch (k) {
    case 2: return construct_pair_design(4);
    case 3: return construct_sts(15);
    default:
      throw DesignError("no built-in design for k = " + std::to_string(k) +
                        "; a (v," + std::to_string(k) + ",1) design file is required");
  }
}

Graph build_ZC(int k, const std::optional<Design>& supplied) {
  if (k < 1) throw DesignError("ZC_k needs k >= 1");
  if (k == 1) {
    GraphBuilder g;
    g.add_vertex(VertexLabel::base(0));
    return std::move(g).build();
  }
  if (!supplied) {
    if (k >= 4) {
      throw DesignError("design required: ZC_" + std::to_string(k) + " needs a (v," + std::to_string(k) +
                        ",1) design with v > " + std::to_string(k * (k - 1) * (k - 1) + 1));
    }
    return block_intersection_graph(canonical_ZC_design(k));
  }
  const Design& d = *supplied;
  if (d.k != k || d.lambda != 1) throw DesignError("ZC_k needs a design with block size k and lambda = 1");
  if (d.v <= k * (k - 1) * (k - 1) + 1) {
    throw DesignError("ZC_k needs v > k(k-1)^2 + 1 = " + std::to_string(k * (k - 1) * (k - 1) + 1));
  }
  Design ordered = d;
  canonicalize(ordered);
  return block_intersection_graph(ordered);
}

using nlohmann::json;

std::string design_to_json(const Design& d) {
  return json{{"v", d.v}, {"k", d.k}, {"lambda", d.lambda}, {"blocks", d.blocks}}.dump();
}

Design design_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    Design d;
    d.v = doc.at("v").get<int>();
    d.k = doc.at("k").get<int>();
    d.lambda = doc.at("lambda").get<int>();
    d.blocks = doc.at("blocks").get<std::vector<std::vector<int>>>();
    return d;
  } catch (const json::exception& e) {
    throw DesignError(std::string("design JSON is malformed: ") + e.what());
  }
}

Design read_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DesignError("cannot open design file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return design_from_json(buf.str());
}

}  // namespace pursuit

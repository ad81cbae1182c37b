#include "pursuit/strategy/big.hpp"

#include <algorithm>

#include "pursuit/error.hpp"
#include "pursuit/strategy/arm.hpp"

namespace pursuit {

namespace {

constexpr int kAnchor = 0;

bool capture_first(const Graph& g, const std::vector<Vertex>& pos, Vertex sv, std::vector<Vertex>& dest) {
  if (std::none_of(pos.begin(), pos.end(), [&](Vertex p) { return g.adjacent(p, sv); })) return false;
  dest.resize(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) dest[i] = closer_step(g, pos[i], sv);
  return true;
}

}  // namespace

BigZombiePolicy::BigZombiePolicy(const Graph& g, Design d) : g_(&g), design_(std::move(d)) {
  if (const auto report = validate_bibd(design_); !report) throw DesignError(report.violation);
  if (design_.lambda != 1) throw DesignError("the block strategy needs lambda = 1");
  canonicalize(design_);
  const int b = static_cast<int>(design_.blocks.size());
  if (static_cast<int>(g.order()) != b) throw GraphError("graph is not the block intersection graph of the design");
  vertex_of_.resize(static_cast<std::size_t>(b));
  block_of_.assign(g.order(), -1);
  for (int i = 0; i < b; ++i) {
    const Vertex v = g.at(VertexLabel::base(i));
    vertex_of_[i] = v;
    block_of_[v] = i;
    const auto& blk = design_.blocks[i];
    for (std::size_t a = 0; a < blk.size(); ++a) {
      for (std::size_t c = a + 1; c < blk.size(); ++c) pair_block_[{blk[a], blk[c]}] = i;
    }
  }
}

int BigZombiePolicy::block_through(int a, int b) const {
  if (a == b) return -1;
  const auto it = pair_block_.find({std::min(a, b), std::max(a, b)});
  return it == pair_block_.end() ? -1 : it->second;
}

std::vector<Vertex> BigZombiePolicy::place() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < design_.blocks.size(); ++i) {
    const auto& blk = design_.blocks[i];
    if (std::find(blk.begin(), blk.end(), kAnchor) != blk.end()) out.push_back(vertex_of_[i]);
  }
  out.resize(std::min<std::size_t>(out.size(), static_cast<std::size_t>(design_.k)));
  return out;
}

// Memory: [zombie turns taken, positions...].
Memory BigZombiePolicy::start(const GameState& initial) const {
  Memory mem{0};
  mem.insert(mem.end(), initial.pursuers.begin(), initial.pursuers.end());
  return mem;
}

PursuerDecision BigZombiePolicy::decide(const Memory& memory, const GameState& s) const {
  Memory mem = memory;
  const std::vector<Vertex> pos = tracked_positions(std::span<const std::int32_t>(mem).subspan(1), s);
  std::vector<Vertex> dest;
  if (!capture_first(*g_, pos, s.survivor, dest)) {
    if (mem[0] != 0) throw OffScript("survivor not adjacent to a zombie on turn two: " + describe(s));
    const auto& target = design_.blocks[block_of_[s.survivor]];
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const int blk = block_through(kAnchor, target[i % target.size()]);
      if (blk < 0) throw OffScript("survivor block meets the anchor: " + describe(s));
      dest.push_back(vertex_of_[blk]);
    }
  }
  ++mem[0];
  std::copy(dest.begin(), dest.end(), mem.begin() + 1);
  return {moves_from(pos, dest), std::move(mem)};
}

}  // namespace pursuit

#include "pursuit/strategy/survivors.hpp"

#include <algorithm>
#include <random>

namespace pursuit {

namespace {

// minstd_rand's whole state is its last output, which fits one memory word.
std::minstd_rand engine_from(std::uint32_t seed) { return std::minstd_rand(seed == 0 ? 1 : seed); }

template <class Pick>
Vertex pick_start(const Graph& g, const std::vector<Vertex>& pursuers, std::uint32_t seed, Pick better) {
  std::vector<Vertex> best;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (best.empty() || better(v, best.front(), pursuers)) {
      best.assign(1, v);
    } else if (!better(best.front(), v, pursuers)) {
      best.push_back(v);
    }
  }
  auto eng = engine_from(seed);
  return best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(eng)];
}

std::pair<int, int> spread(const Graph& g, Vertex v, const std::vector<Vertex>& pursuers) {
  int nearest = Graph::kUnreachable, total = 0;
  for (Vertex p : pursuers) {
    nearest = std::min(nearest, g.distance(p, v));
    total += g.distance(p, v);
  }
  return {nearest, total};
}

Memory seeded(std::uint32_t seed) { return {static_cast<std::int32_t>(engine_from(seed)())}; }

}  // namespace

Vertex RandomSurvivor::place(const std::vector<Vertex>& pursuers) const {
  const Graph& g = *g_;
  return pick_start(g, pursuers, seed_, [&](Vertex a, Vertex b, const std::vector<Vertex>& p) {
    return (spread(g, a, p).first > 1) > (spread(g, b, p).first > 1);
  });
}

Memory RandomSurvivor::start(const GameState&) const { return seeded(seed_); }

EvaderDecision RandomSurvivor::decide(const Memory& memory, const GameState& s) const {
  auto eng = engine_from(static_cast<std::uint32_t>(memory.at(0)));
  const std::vector<Vertex> moves = legal_survivor_moves(*g_, s);
  const Vertex to = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(eng)];
  return {to, Memory{static_cast<std::int32_t>(eng())}};
}

Vertex GreedySurvivor::place(const std::vector<Vertex>& pursuers) const {
  const Graph& g = *g_;
  return pick_start(g, pursuers, seed_, [&](Vertex a, Vertex b, const std::vector<Vertex>& p) {
    return spread(g, a, p) > spread(g, b, p);
  });
}

Memory GreedySurvivor::start(const GameState&) const { return seeded(seed_); }

EvaderDecision GreedySurvivor::decide(const Memory& memory, const GameState& s) const {
  auto eng = engine_from(static_cast<std::uint32_t>(memory.at(0)));
  std::vector<Vertex> best;
  std::pair<int, int> score{-1, -1};
  for (Vertex t : legal_survivor_moves(*g_, s)) {
    const auto sc = spread(*g_, t, s.pursuers);
    if (sc > score) {
      score = sc;
      best.assign(1, t);
    } else if (sc == score) {
      best.push_back(t);
    }
  }
  const Vertex to = best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(eng)];
  return {to, Memory{static_cast<std::int32_t>(eng())}};
}

}  // namespace pursuit

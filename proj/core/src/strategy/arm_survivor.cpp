#include <algorithm>
#include <array>

#include "pursuit/error.hpp"
#include "pursuit/strategy/arm.hpp"

namespace pursuit {

namespace {

enum Mode : std::int32_t { kWait = 0, kGood = 1, kCircuit = 2 };
enum Word : std::size_t { kMode = 0, kX = 1, kStep = 2, kCase = 3 };

// Case 1 walks the outer ring back to out:0:x; case 2 leaves for T_{x+1}.
std::array<Vertex, 5> circuit(const ArmView& arm, int x, int which, int& length) {
  if (which == 1) {
    length = 5;
    return {arm.out(4, x), arm.out(3, x), arm.out(2, x), arm.out(1, x), arm.out(0, x)};
  }
  length = 4;
  return {arm.out(4, x), arm.out(3, x), arm.out(2, x), arm.out(0, x + 1), -1};
}

}  // namespace

void ArmSurvivorScript::init(std::span<std::int32_t> mem) {
  mem[kMode] = kWait;
  mem[kX] = 0;
  mem[kStep] = 0;
  mem[kCase] = 0;
}

Vertex ArmSurvivorScript::step(const ArmView& arm, std::span<std::int32_t> mem, const GameState& s) {
  const Graph& g = arm.graph();
  const Vertex here = s.survivor;
  if (mem[kMode] == kWait) {
    if (here != arm.out(0, 0)) throw OffScript("survivor expected to wait at out:0:0 in " + describe(s));
    const bool threatened =
        std::any_of(s.pursuers.begin(), s.pursuers.end(), [&](Vertex p) { return g.adjacent(p, here); });
    if (!threatened) return here;
    mem[kMode] = kGood;
    mem[kX] = 0;
  }
  if (mem[kMode] == kGood) {
    const int x = mem[kX];
    if (!survivor_good(x, arm, s)) {
      throw OffScript("position is not " + std::to_string(x) + "-survivor-good: " + describe(s));
    }
    int nearest_other = -1;
    for (Vertex p : s.pursuers) {
      if (g.adjacent(p, here)) continue;
      const int d = g.distance(p, here);
      if (nearest_other < 0 || d < nearest_other) nearest_other = d;
    }
    const int which = (nearest_other < 0 || nearest_other >= 6) ? 1 : 2;
    if (which == 2 && x == arm.length() - 1) {
      throw OffScript("case 2 requested in the last gadget copy: " + describe(s));
    }
    mem[kMode] = kCircuit;
    mem[kCase] = which;
    mem[kStep] = 1;
    return arm.out(4, x);
  }
  const int x = mem[kX];
  int length = 0;
  const auto seq = circuit(arm, x, mem[kCase], length);
  const int at = mem[kStep];
  if (here != seq[at - 1]) throw OffScript("survivor left its circuit: " + describe(s));
  const Vertex next = seq[at];
  mem[kStep] = at + 1;
  if (at + 1 == length) {
    mem[kMode] = kGood;
    mem[kStep] = 0;
    if (mem[kCase] == 2) mem[kX] = x + 1;
  }
  return next;
}

Memory ArmSurvivorPolicy::start(const GameState&) const {
  Memory mem(ArmSurvivorScript::kWords);
  ArmSurvivorScript::init(mem);
  return mem;
}

EvaderDecision ArmSurvivorPolicy::decide(const Memory& memory, const GameState& s) const {
  Memory mem = memory;
  const Vertex to = ArmSurvivorScript::step(arm_, mem, s);
  return {to, std::move(mem)};
}

}  // namespace pursuit

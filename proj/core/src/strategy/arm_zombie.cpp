#include <algorithm>

#include "pursuit/error.hpp"
#include "pursuit/strategy/arm.hpp"

namespace pursuit {

namespace {

// z_1's progress through the case analysis. kAtGood means z_1 stands
// on out:0:x and decides on this zombie turn.
enum Phase : std::int32_t {
  kApproach = 0,
  kAtGood,
  kBypass,    // z_1 on out:1:x, survivor beyond T_x
  kToExit,    // z_1 on out:2:x, next out:0:(x+1)
  kCase1,     // z_1 on in:1:x
  kCase1c,    // z_1 on in:2:x
  kCase1c2,   // z_1 on in:3:x
  kCase2,     // z_1 on in:4:x
  kCase2b,    // z_1 on in:3:x
  kCase2b2,   // z_1 on in:2:x
  kObserve,   // z_1 on the hub
  kCorner,    // z_1 on in:j:x next to the survivor on out:j:x
};

enum Word : std::size_t { kPhase = 0, kX = 1, kChaser = 2, kLead = 3 };

std::int32_t lead_mask(const std::vector<Vertex>& pos) {
  std::int32_t mask = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i] == pos[0]) mask |= std::int32_t{1} << i;
  }
  return mask;
}

bool at_any(Vertex v, std::initializer_list<Vertex> options) {
  return std::find(options.begin(), options.end(), v) != options.end();
}

Vertex chaser_step(const ArmView& arm, int x, Vertex p, Vertex survivor) {
  const Graph& g = arm.graph();
  const Vertex target = arm.out(0, x);
  const int d = g.distance(p, survivor);
  if (p == target) {
    for (Vertex w : {arm.in(1, x), arm.in(4, x)}) {
      if (g.distance(w, survivor) == d - 1) return w;
    }
    return closer_step(g, p, survivor);
  }
  if (arm.behind(p, x)) {
    Vertex best = -1;
    for (Vertex w : g.neighbors(p)) {
      if (g.distance(w, survivor) != d - 1) continue;
      if (best < 0 || g.distance(w, target) < g.distance(best, target)) best = w;
    }
    if (best >= 0) return best;
  }
  return closer_step(g, p, survivor);
}

[[noreturn]] void off_script(const char* where, const std::vector<Vertex>& pos, Vertex survivor) {
  std::string msg = std::string("arm zombies: unexpected survivor position ") + std::to_string(survivor) + " in " +
                    where + "; zombies at [";
  for (std::size_t i = 0; i < pos.size(); ++i) msg += (i ? "," : "") + std::to_string(pos[i]);
  throw OffScript(msg + "]");
}

}  // namespace

void ArmZombieScript::init(std::span<std::int32_t> mem, const std::vector<Vertex>& positions) {
  mem[kPhase] = kApproach;
  mem[kX] = 0;
  mem[kChaser] = -1;
  mem[kLead] = lead_mask(positions);
}

std::vector<Vertex> ArmZombieScript::step(const ArmView& arm, std::span<std::int32_t> mem,
                                          const std::vector<Vertex>& pos, Vertex sv) {
  const Graph& g = arm.graph();
  const std::size_t m = pos.size();
  std::vector<Vertex> dest(m);

  if (std::any_of(pos.begin(), pos.end(), [&](Vertex p) { return g.distance(p, sv) == 1; })) {
    for (std::size_t i = 0; i < m; ++i) dest[i] = closer_step(g, pos[i], sv);
    return dest;
  }

  const Vertex z1 = pos[0];
  int x = mem[kX];
  if (mem[kPhase] == kApproach && z1 == arm.out(0, 0)) mem[kPhase] = kAtGood;

  Vertex next = -1;
  switch (mem[kPhase]) {
    case kApproach:
      next = closer_step(g, z1, sv);
      if (next == arm.out(0, 0)) mem[kPhase] = kAtGood;
      break;
    case kAtGood: {
      if (z1 != arm.out(0, x)) off_script("good position (z_1 misplaced)", pos, sv);
      mem[kLead] = lead_mask(pos);
      GameState s{pos, sv, Side::Pursuer};
      std::sort(s.pursuers.begin(), s.pursuers.end());
      if (!zombie_good(x, arm, s)) off_script("a position that is not zombie-good", pos, sv);
      std::int32_t chaser = -1;
      for (std::size_t i = 0; i < m; ++i) {
        if ((mem[kLead] >> i) & 1) continue;
        if (chaser < 0 || g.distance(pos[i], sv) < g.distance(pos[chaser], sv)) chaser = static_cast<std::int32_t>(i);
      }
      mem[kChaser] = chaser;
      const int block = *arm.block_of(sv);
      if (block > x) {
        next = arm.out(1, x);
        mem[kPhase] = kBypass;
      } else if (at_any(sv, {arm.hub(x), arm.in(2, x), arm.out(2, x)})) {
        next = arm.in(1, x);
        mem[kPhase] = kCase1;
      } else if (at_any(sv, {arm.in(3, x), arm.out(3, x)})) {
        next = arm.in(4, x);
        mem[kPhase] = kCase2;
      } else {
        off_script("good position", pos, sv);
      }
      break;
    }
    case kBypass:
      next = arm.out(2, x);
      mem[kPhase] = kToExit;
      break;
    case kToExit:
      next = arm.out(0, x + 1);
      mem[kPhase] = kAtGood;
      mem[kX] = x + 1;
      break;
    case kCase1:
      if (sv == arm.out(0, x + 1)) {
        next = arm.out(2, x);
        mem[kPhase] = kToExit;
      } else if (sv == arm.in(4, x)) {
        next = arm.hub(x);
        mem[kPhase] = kObserve;
      } else if (at_any(sv, {arm.in(3, x), arm.out(3, x)})) {
        next = arm.in(2, x);
        mem[kPhase] = kCase1c;
      } else {
        off_script("case 1", pos, sv);
      }
      break;
    case kCase1c:
      if (!at_any(sv, {arm.in(4, x), arm.out(4, x)})) off_script("case 1(c)", pos, sv);
      next = arm.in(3, x);
      mem[kPhase] = kCase1c2;
      break;
    case kCase1c2:
      if (sv != arm.in(0, x)) off_script("case 1(c), second step", pos, sv);
      next = arm.hub(x);
      mem[kPhase] = kObserve;
      break;
    case kCase2:
      if (!at_any(sv, {arm.in(2, x), arm.out(2, x)})) off_script("case 2", pos, sv);
      next = arm.in(3, x);
      mem[kPhase] = kCase2b;
      break;
    case kCase2b:
      if (sv == arm.out(0, x + 1)) {
        next = arm.out(2, x);
        mem[kPhase] = kToExit;
      } else if (at_any(sv, {arm.in(1, x), arm.out(1, x)})) {
        next = arm.in(2, x);
        mem[kPhase] = kCase2b2;
      } else {
        off_script("case 2(b)", pos, sv);
      }
      break;
    case kCase2b2:
      if (sv != arm.in(0, x)) off_script("case 2(b), second step", pos, sv);
      next = arm.hub(x);
      mem[kPhase] = kObserve;
      break;
    case kObserve: {
      int ring = -1;
      for (int j : {0, 1, 3, 4}) {
        if (sv == arm.out(j, x)) ring = j;
      }
      if (ring < 0) off_script("the observation", pos, sv);
      next = arm.in(ring, x);
      mem[kPhase] = kCorner;
      break;
    }
    default:
      off_script("a cornered position", pos, sv);
  }

  for (std::size_t i = 0; i < m; ++i) {
    if ((mem[kLead] >> i) & 1) {
      dest[i] = next;
    } else if (static_cast<std::int32_t>(i) == mem[kChaser]) {
      dest[i] = chaser_step(arm, x, pos[i], sv);
    } else {
      dest[i] = closer_step(g, pos[i], sv);
    }
  }
  return dest;
}

Memory ArmZombiePolicy::start(const GameState& initial) const {
  std::vector<Vertex> pos = initial.pursuers;
  const Graph& g = arm_.graph();
  std::stable_sort(pos.begin(), pos.end(), [&](Vertex a, Vertex b) {
    return g.distance(a, arm_.root()) < g.distance(b, arm_.root());
  });
  Memory mem(ArmZombieScript::kWords);
  ArmZombieScript::init(mem, pos);
  mem.insert(mem.end(), pos.begin(), pos.end());
  return mem;
}

PursuerDecision ArmZombiePolicy::decide(const Memory& memory, const GameState& s) const {
  Memory mem = memory;
  const std::span<std::int32_t> header(mem.data(), ArmZombieScript::kWords);
  const std::vector<Vertex> pos =
      tracked_positions(std::span<const std::int32_t>(mem).subspan(ArmZombieScript::kWords), s);
  const std::vector<Vertex> dest = ArmZombieScript::step(arm_, header, pos, s.survivor);
  std::copy(dest.begin(), dest.end(), mem.begin() + ArmZombieScript::kWords);
  return {moves_from(pos, dest), std::move(mem)};
}

}  // namespace pursuit

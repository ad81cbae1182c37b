#include <gtest/gtest.h>

#include <algorithm>

#include "pursuit/design.hpp"
#include "pursuit/error.hpp"
#include "pursuit/families.hpp"
#include "pursuit/strategy/arm.hpp"
#include "pursuit/strategy/big.hpp"
#include "pursuit/strategy/hypercube.hpp"
#include "pursuit/strategy/survivors.hpp"
#include "pursuit/strategy/zkm.hpp"
#include "pursuit/validate.hpp"
#include "pursuit/zkm_graph.hpp"

using namespace pursuit;

namespace {

std::uint64_t bits(const char* text) { return std::stoull(text, nullptr, 2); }

GameState state(std::vector<Vertex> pursuers, Vertex survivor, Side side) {
  std::sort(pursuers.begin(), pursuers.end());
  return GameState{std::move(pursuers), survivor, side};
}

// The zombie of a two-zombie lemma instance that is not on the attachment vertex.
Vertex deeper_zombie(const LemmaInstance& inst) {
  for (Vertex p : inst.state.pursuers)
    if (p != inst.hub_vertex) return p;
  return inst.hub_vertex;
}

}  // namespace

// ---- lemma instances

TEST(LemmaInstance, DepthsBecomeDistances) {
  // v is two steps from out:0:0 (v - out:2:-1 - out:0:0).
  const LemmaInstance a = build_lemma_instance(1, {0, 3}, LemmaSide::Survivor);
  const ArmView arm(a.graph, a.arm_copy);
  std::vector<int> d;
  for (Vertex p : a.state.pursuers) d.push_back(a.graph.distance(p, arm.out(0, 0)));
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d, (std::vector<int>{2, 5}));
  EXPECT_EQ(a.state.survivor, arm.out(0, 0));
  EXPECT_EQ(a.state.to_move, Side::Evader);
  EXPECT_EQ(build_lemma_instance(1, {0, 2}, LemmaSide::Zombies).state.to_move, Side::Pursuer);
}

TEST(LemmaInstance, SharedPathLength) {
  const LemmaInstance a = build_lemma_instance(2, {1, 4}, LemmaSide::Survivor, 8);
  const LemmaInstance b = build_lemma_instance(2, {3, 3}, LemmaSide::Survivor, 8);
  EXPECT_EQ(a.graph.order(), b.graph.order());
  EXPECT_EQ(a.graph.size(), b.graph.size());
  for (const GameState& s : lemma_zombie_starts(a)) EXPECT_EQ(s.pursuers, a.state.pursuers);
  EXPECT_THROW(build_lemma_instance(1, {-1}, LemmaSide::Survivor), GraphError);
  EXPECT_THROW(build_lemma_instance(1, {9}, LemmaSide::Survivor, 8), GraphError);
  EXPECT_THROW(build_lemma_instance(1, {}, LemmaSide::Survivor), GraphError);
}

TEST(ModGapSum, UsesResidues) {
  EXPECT_EQ(mod5_gap_sum({3, 1, 1}), 2);
  EXPECT_EQ(mod5_gap_sum({1, 6}), 0);
  EXPECT_EQ(mod5_gap_sum({1, 8}), 2);
  EXPECT_EQ(mod5_gap_sum({4}), 0);
}

// ---- survivor-good / zombie-good

TEST(SurvivorGood, ZombiesAtTheAttachment) {
  const LemmaInstance inst = build_lemma_instance(2, {0, 0}, LemmaSide::Survivor);
  const ArmView arm(inst.graph, inst.arm_copy);
  EXPECT_TRUE(survivor_good(0, arm, inst.state));
  EXPECT_FALSE(survivor_good(1, arm, inst.state));
  GameState on_hub = inst.state;
  on_hub.survivor = arm.hub(0);
  EXPECT_FALSE(survivor_good(0, arm, on_hub));
  GameState wrong_side = inst.state;
  wrong_side.to_move = Side::Pursuer;
  EXPECT_FALSE(survivor_good(0, arm, wrong_side));
}

TEST(SurvivorGood, GapSumAgainstArmLength) {
  // Distances 2 and 4: gap sum 2, allowed when n - 1 >= 2.
  const LemmaInstance short_arm = build_lemma_instance(2, {0, 2}, LemmaSide::Survivor);
  EXPECT_FALSE(survivor_good(0, ArmView(short_arm.graph, short_arm.arm_copy), short_arm.state));
  const LemmaInstance long_arm = build_lemma_instance(4, {0, 2}, LemmaSide::Survivor);
  EXPECT_TRUE(survivor_good(0, ArmView(long_arm.graph, long_arm.arm_copy), long_arm.state));
}

TEST(SurvivorGood, AdjacentZombiesOnlyOnAllowedSpots) {
  const LemmaInstance inst = build_lemma_instance(2, {0}, LemmaSide::Survivor);
  const ArmView arm(inst.graph, inst.arm_copy);
  for (Vertex ok : {arm.root(), arm.in(1, 0), arm.out(1, 0)})
    EXPECT_TRUE(survivor_good(0, arm, state({ok}, arm.out(0, 0), Side::Evader)));
  for (Vertex bad : {arm.in(0, 0), arm.in(4, 0), arm.out(4, 0)})
    EXPECT_FALSE(survivor_good(0, arm, state({bad}, arm.out(0, 0), Side::Evader)));
}

TEST(ZombieGood, SpreadAgainstArmLength) {
  // Lead on out:0:0 (distance 2 to the hub), the other zombie on v (distance 4).
  for (int n : {1, 2, 3}) {
    const LemmaInstance inst = build_lemma_instance(n, {0}, LemmaSide::Zombies);
    const ArmView arm(inst.graph, inst.arm_copy);
    const GameState s = state({arm.out(0, 0), inst.hub_vertex}, arm.hub(0), Side::Pursuer);
    EXPECT_EQ(zombie_good(0, arm, s), n <= 2) << n;
  }
}

TEST(ZombieGood, NeedsALeadOnTheEntrance) {
  const LemmaInstance inst = build_lemma_instance(1, {0, 0}, LemmaSide::Zombies);
  const ArmView arm(inst.graph, inst.arm_copy);
  EXPECT_FALSE(zombie_good(0, arm, state({inst.hub_vertex, inst.hub_vertex}, arm.hub(0), Side::Pursuer)));
  // The survivor behind T_0 is not covered.
  EXPECT_FALSE(zombie_good(0, arm, state({arm.out(0, 0), arm.in(3, 0)}, arm.hub(0), Side::Pursuer)));
}

// ---- arm survivor script

TEST(ArmSurvivor, WaitsUntilThreatened) {
  const LemmaInstance inst = build_lemma_instance(2, {0}, LemmaSide::Survivor);
  const ArmView arm(inst.graph, inst.arm_copy);
  const ArmSurvivorPolicy p(inst.graph, inst.arm_copy);
  EXPECT_EQ(p.place(inst.state.pursuers), arm.out(0, 0));
  const EvaderDecision d = p.decide(p.start(inst.state), inst.state);
  EXPECT_EQ(d.to, arm.out(0, 0));
}

TEST(ArmSurvivor, CaseOneCircuitReturnsHome) {
  const LemmaInstance inst = build_lemma_instance(2, {0}, LemmaSide::Survivor);
  const ArmView arm(inst.graph, inst.arm_copy);
  const ArmSurvivorPolicy p(inst.graph, inst.arm_copy);
  Memory mem = p.start(inst.state);
  Vertex at = arm.out(0, 0);
  std::vector<Vertex> walk;
  for (int i = 0; i < 5; ++i) {
    const EvaderDecision d = p.decide(mem, state({arm.root()}, at, Side::Evader));
    mem = d.memory;
    at = d.to;
    walk.push_back(at);
  }
  EXPECT_EQ(walk, (std::vector<Vertex>{arm.out(4, 0), arm.out(3, 0), arm.out(2, 0), arm.out(1, 0), arm.out(0, 0)}));
}

TEST(ArmSurvivor, CaseTwoMovesToTheNextCopy) {
  // One zombie adjacent, the next at distance 3 < 6.
  const LemmaInstance inst = build_lemma_instance(3, {0, 1}, LemmaSide::Survivor);
  const ArmView arm(inst.graph, inst.arm_copy);
  const ArmSurvivorPolicy p(inst.graph, inst.arm_copy);
  const Vertex second = deeper_zombie(inst);
  Memory mem = p.start(inst.state);
  Vertex at = arm.out(0, 0);
  std::vector<Vertex> walk;
  for (int i = 0; i < 4; ++i) {
    const EvaderDecision d = p.decide(mem, state({arm.root(), second}, at, Side::Evader));
    mem = d.memory;
    at = d.to;
    walk.push_back(at);
  }
  EXPECT_EQ(walk, (std::vector<Vertex>{arm.out(4, 0), arm.out(3, 0), arm.out(2, 0), arm.out(0, 1)}));
}

TEST(ArmSurvivor, OffScriptOutsideTheCases) {
  const LemmaInstance inst = build_lemma_instance(2, {0}, LemmaSide::Survivor);
  const ArmView arm(inst.graph, inst.arm_copy);
  const ArmSurvivorPolicy p(inst.graph, inst.arm_copy);
  EXPECT_THROW(p.decide(p.start(inst.state), state({inst.hub_vertex}, arm.hub(0), Side::Evader)), OffScript);
  EXPECT_THROW(p.decide(p.start(inst.state), state({arm.in(0, 0)}, arm.out(0, 0), Side::Evader)), OffScript);
}

// ---- arm zombie script

namespace {

struct ZombieScene {
  LemmaInstance inst;
  ArmView arm;
  Memory mem;
  std::vector<Vertex> pos;

  explicit ZombieScene(int n)
      : inst(build_lemma_instance(n, {0}, LemmaSide::Zombies)), arm(inst.graph, inst.arm_copy),
        mem(ArmZombieScript::kWords) {
    pos = {arm.out(0, 0), inst.hub_vertex};
    ArmZombieScript::init(mem, pos);
  }
  std::vector<Vertex> step(Vertex survivor) {
    pos = ArmZombieScript::step(arm, mem, pos, survivor);
    return pos;
  }
};

}  // namespace

TEST(ArmZombie, HubSendsLeadToIn1) {
  ZombieScene sc(2);
  const auto dest = sc.step(sc.arm.hub(0));
  EXPECT_EQ(dest[0], sc.arm.in(1, 0));
  EXPECT_EQ(dest[1], sc.arm.root());
}

TEST(ArmZombie, RingThreeSendsLeadToIn4) {
  for (int which : {0, 1}) {
    ZombieScene sc(2);
    const Vertex sv = which ? sc.arm.out(3, 0) : sc.arm.in(3, 0);
    EXPECT_EQ(sc.step(sv)[0], sc.arm.in(4, 0));
  }
}

TEST(ArmZombie, SurvivorAheadGetsBypass) {
  ZombieScene sc(2);
  std::vector<Vertex> lead;
  for (int i = 0; i < 3; ++i) lead.push_back(sc.step(sc.arm.end())[0]);
  EXPECT_EQ(lead, (std::vector<Vertex>{sc.arm.out(1, 0), sc.arm.out(2, 0), sc.arm.out(0, 1)}));
}

TEST(ArmZombie, AdjacentSurvivorIsChasedDirectly) {
  ZombieScene sc(2);
  const auto dest = sc.step(sc.arm.out(1, 0));
  EXPECT_EQ(dest[0], sc.arm.out(1, 0));
}

TEST(ArmZombie, NotGoodIsOffScript) {
  ZombieScene sc(3);
  EXPECT_THROW(sc.step(sc.arm.hub(0)), OffScript);
}

TEST(ArmZombie, PolicyTracksIdentities) {
  const LemmaInstance inst = build_lemma_instance(2, {0, 2}, LemmaSide::Zombies);
  const ArmZombiePolicy p(inst.graph, inst.arm_copy, inst.state.pursuers);
  const Memory mem = p.start(inst.state);
  ASSERT_EQ(mem.size(), ArmZombieScript::kWords + 2);
  EXPECT_EQ(mem[ArmZombieScript::kWords], inst.hub_vertex);  // nearest the root first
  GameState tampered = inst.state;
  tampered.pursuers = {inst.hub_vertex, inst.hub_vertex};
  EXPECT_THROW(p.decide(mem, tampered), OffScript);
}

// ---- hypercube

TEST(HypercubeHomes, Examples) {
  EXPECT_EQ(hypercube_home_setting({true, true, false, false}, 6), (std::vector<int>{1, 2, 4, 6}));
  EXPECT_EQ(hypercube_home_setting({true, false}, 3), (std::vector<int>{1, 3}));
  EXPECT_EQ(hypercube_home_setting({false, true}, 3), (std::vector<int>{3, 1}));
  EXPECT_THROW(hypercube_home_setting({true}, 4), Error);
}

TEST(HypercubeHomes, CoverageUpTo30) {
  for (int n = 1; n <= 30; ++n) EXPECT_TRUE(home_setting_covers(n)) << n;
  EXPECT_EQ(hypercube_zombie_count(1), 1);
  EXPECT_EQ(hypercube_zombie_count(5), 4);
  EXPECT_EQ(hypercube_zombie_count(9), 6);
}

TEST(Reach, WorkedExample) {
  const std::uint64_t survivor = bits("0000000"), zombie = bits("0110010");
  EXPECT_EQ(reach(zombie, survivor, 4, 7), 2);
  EXPECT_EQ(reach_flip(zombie, survivor, 4, 7), 6);
  EXPECT_EQ(reach(zombie ^ coordinate_mask(6, 7), survivor, 4, 7), 5);
  EXPECT_EQ(reach(zombie, zombie, 3, 7), 7);
  EXPECT_EQ(reach_flip(zombie, zombie, 3, 7), 0);
}

TEST(HypercubePolicy, PlacementGroups) {
  EXPECT_EQ(HypercubeZombiePolicy(5).place(), (std::vector<Vertex>{0, 0, 1, 1}));
  EXPECT_EQ(HypercubeZombiePolicy(3).place(), (std::vector<Vertex>{0, 1}));
  EXPECT_THROW(HypercubeZombiePolicy(0), GraphError);
}

TEST(HypercubePolicy, WorkedExampleFlip) {
  const HypercubeZombiePolicy p(7);
  const auto z = static_cast<Vertex>(bits("0110010"));
  const GameState s = state({z, 127, 127, 127, 127}, 0, Side::Pursuer);
  Memory mem = p.start(s);
  ASSERT_EQ(mem.size(), 11u);
  mem[0] = 5;  // the survivor moved: keep the pinned homes
  for (int i = 0; i < 5; ++i) mem[1 + i] = mem[6 + i] == z ? 4 : 1;
  const PursuerDecision d = p.decide(mem, s);
  int seen = 0;
  for (const Step& st : d.move) {
    if (st.from != z) continue;
    EXPECT_EQ(st.to, z ^ static_cast<Vertex>(coordinate_mask(6, 7)));
    ++seen;
  }
  EXPECT_EQ(seen, 1);
}

TEST(HypercubePolicy, HomesStayValidWhenTheSurvivorStays) {
  const HypercubeZombiePolicy p(3);
  const Graph q = build_hypercube(3);
  GameState s = initial_state(q, p.place(), 0b111);
  PursuerDecision d = p.decide(p.start(s), s);
  EXPECT_EQ(d.memory[0], 0b111);
  s = apply_pursuer_move(q, Variant::Zombies, s, d.move);
  ASSERT_FALSE(is_capture(s));
  s = apply_survivor_move(q, s, s.survivor);
  d = p.decide(d.memory, s);
  for (int h : p.homes(d.memory)) EXPECT_TRUE(h >= 1 && h <= 3);
}

TEST(HypercubePolicy, AdjacentZombieCaptures) {
  const HypercubeZombiePolicy p(3);
  const Graph q = build_hypercube(3);
  const GameState s = state({0b000, 0b110}, 0b111, Side::Pursuer);
  const PursuerDecision d = p.decide(p.start(s), s);
  EXPECT_TRUE(is_capture(apply_pursuer_move(q, Variant::Zombies, s, d.move)));
}

TEST(HypercubePolicy, SmokeAgainstRandomAndGreedySurvivors) {
  for (int n = 5; n <= 6; ++n) {
    const Graph q = build_hypercube(n);
    const HypercubeZombiePolicy p(n);
    for (std::uint32_t seed = 1; seed <= 30; ++seed) {
      EXPECT_TRUE(play_match(q, Variant::Zombies, p, RandomSurvivor(q, seed), 500).captured);
      EXPECT_TRUE(play_match(q, Variant::Zombies, p, GreedySurvivor(q, seed), 500).captured);
    }
  }
}

// ---- block intersection graphs

TEST(BigPolicy, FanoCapturesOnTurnOne) {
  const Design d = construct_sts(7);
  const Graph g = block_intersection_graph(d);
  const Verdict v = validate_pursuer_policy(g, Variant::Zombies, BigZombiePolicy(g, d), Objective::CaptureAll);
  EXPECT_TRUE(v.holds()) << v.reason;
  EXPECT_EQ(v.max_pursuer_turns, 1);
}

TEST(BigPolicy, Sts9CapturesByTurnTwo) {
  const Design d = construct_sts(9);
  const Graph g = block_intersection_graph(d);
  const BigZombiePolicy p(g, d);
  EXPECT_EQ(p.place().size(), 3u);  // r = (v - 1) / (k - 1) = 4 blocks through a point, k = 3 used
  const Verdict v = validate_pursuer_policy(g, Variant::Zombies, p, Objective::CaptureAll);
  EXPECT_TRUE(v.holds()) << v.reason;
  EXPECT_LE(v.max_pursuer_turns, 2);
}

TEST(BigPolicy, BlockThroughTwoPoints) {
  const Design d = construct_sts(9);
  const Graph g = block_intersection_graph(d);
  const BigZombiePolicy p(g, d);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      if (a == b) continue;
      const auto& blk = p.design().blocks[static_cast<std::size_t>(p.block_through(a, b))];
      EXPECT_NE(std::find(blk.begin(), blk.end(), a), blk.end());
      EXPECT_NE(std::find(blk.begin(), blk.end(), b), blk.end());
    }
}

TEST(BigPolicy, RejectsRepeatedPairs) {
  Design twice = construct_pair_design(4);
  for (const auto& b : construct_pair_design(4).blocks) twice.blocks.push_back(b);
  twice.lambda = 2;
  const Graph g = build_complete(12);
  EXPECT_THROW(BigZombiePolicy(g, twice), DesignError);
  EXPECT_THROW(BigZombiePolicy(build_complete(5), construct_sts(7)), GraphError);
}

// ---- Z_{k,m}

TEST(Zkm, ZombiePlacementOnZ12) {
  const Graph g = build_Z(1, 2);
  const ZkmZombiePolicy p(g, 1, 2);
  const auto placed = p.place();
  ASSERT_EQ(placed.size(), 2u);
  EXPECT_EQ(placed[0], 0);
  EXPECT_EQ(g.label(placed[1]).kind, LabelKind::PathNode);
  EXPECT_EQ(g.label(placed[1]).index, 4);
}

TEST(Zkm, SurvivorStartsOnAFreeArm) {
  const Graph g = build_Z(1, 2);
  const ZkmLayout lay(g);
  const ZkmSurvivorPolicy p(g, 1, 2);
  const Vertex start = p.place({0});
  EXPECT_TRUE(g.label(start).kind == LabelKind::ArmOut && g.label(start).ring == 0 && g.label(start).index == 0);
  const auto arms = lay.arms_at(0);
  ASSERT_GE(arms.size(), 2u);
  const Vertex first_end = ArmView(g, lay.hangs[static_cast<std::size_t>(arms[0])].copy).end();
  const Vertex other = p.place({0, first_end});
  EXPECT_NE(lay.hang_of[other], arms[0]);
  EXPECT_EQ(g.label(other).kind, LabelKind::ArmOut);
}

TEST(Zkm, StrategiesHoldOnSmallInstances) {
  for (auto [k, m] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    const Graph g = build_Z(k, m);
    const Verdict cops = validate_pursuer_policy(g, Variant::Cops, ZkmCopPolicy(g, k, m), Objective::CaptureAll);
    EXPECT_TRUE(cops.holds()) << k << "," << m << ": " << cops.reason;
    const Verdict zombies =
        validate_pursuer_policy(g, Variant::Zombies, ZkmZombiePolicy(g, k, m), Objective::CaptureAll);
    EXPECT_TRUE(zombies.holds()) << k << "," << m << ": " << zombies.reason;
    if (m > 1) {
      ValidationOptions o;
      o.pursuer_count = m - 1;
      const Verdict v =
          validate_evader_policy(g, Variant::Zombies, ZkmSurvivorPolicy(g, k, m), Objective::SafetyForever, o);
      EXPECT_TRUE(v.holds()) << k << "," << m << ": " << v.reason;
    }
  }
}

TEST(Zkm, CopsFinishZ11QuicklyFromTheBase) {
  const Graph g = build_Z(1, 1);
  const Verdict v = validate_pursuer_policy(g, Variant::Cops, ZkmCopPolicy(g, 1, 1), Objective::CaptureAll);
  EXPECT_TRUE(v.holds());
  EXPECT_LE(v.max_pursuer_turns, 3);
}

TEST(Zkm, LayoutChecks) {
  const Graph g = build_Z(1, 2);
  EXPECT_EQ(g.order(), 97u);
  EXPECT_THROW(ZkmZombiePolicy(g, 1, 3), GraphError);
  EXPECT_THROW(ZkmView(build_hypercube(2), 1, 1), GraphError);
}

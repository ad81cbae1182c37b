#include <gtest/gtest.h>

#include "corpus.hpp"
#include "json.hpp"
#include "pursuit/error.hpp"
#include "pursuit/families.hpp"
#include "pursuit/game.hpp"
#include "pursuit/strategy/arm.hpp"
#include "pursuit/strategy/survivors.hpp"

using namespace pursuit;

namespace {

// Steps every zombie one closer along its lowest-id geodesic.
class GreedyZombies : public PursuerPolicy {
 public:
  GreedyZombies(const Graph& g, std::vector<Vertex> at) : g_(&g), at_(std::move(at)) {}
  std::string name() const override { return "greedy"; }
  std::vector<Vertex> place() const override { return at_; }
  Memory start(const GameState&) const override { return {}; }
  PursuerDecision decide(const Memory& mem, const GameState& s) const override {
    PursuerMove mv;
    for (Vertex p : s.pursuers) mv.push_back({p, closer_step(*g_, p, s.survivor)});
    return {mv, mem};
  }

 private:
  const Graph* g_;
  std::vector<Vertex> at_;
};

}  // namespace

TEST(PursuerMoves, ZombieOnK2StepsOntoSurvivor) {
  const Graph g = build_complete(2);
  const auto moves = legal_pursuer_moves(g, Variant::Zombies, initial_state(g, {0}, 1));
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0], std::vector<Vertex>{1});
}

TEST(PursuerMoves, ZombieOnC4AtDistanceTwo) {
  const Graph g = build_cycle(4);
  EXPECT_EQ(legal_pursuer_moves(g, Variant::Zombies, initial_state(g, {0}, 2)).size(), 2u);
}

TEST(PursuerMoves, OneCopHasDegreePlusOne) {
  for (const auto& [name, g] : fixtures::small_corpus()) {
    for (Vertex p = 0; p < static_cast<Vertex>(g.order()); ++p) {
      const Vertex s = (p + 1) % static_cast<Vertex>(g.order());
      if (s == p) continue;
      EXPECT_EQ(legal_pursuer_moves(g, Variant::Cops, initial_state(g, {p}, s)).size(),
                static_cast<std::size_t>(g.degree(p) + 1))
          << name;
    }
  }
}

TEST(PursuerMoves, OutOfTurnOrFinishedGameIsRejected) {
  const Graph g = build_cycle(5);
  GameState s = initial_state(g, {0}, 2);
  s.to_move = Side::Evader;
  EXPECT_THROW(legal_pursuer_moves(g, Variant::Cops, s), IllegalMove);
  EXPECT_THROW(legal_pursuer_moves(g, Variant::Cops, initial_state(g, {2}, 2)), IllegalMove);
  EXPECT_THROW(legal_survivor_moves(g, initial_state(g, {0}, 2)), IllegalMove);
}

TEST(PursuerMoves, StackedZombiesShareOneMultiset) {
  const Graph g = build_cycle(6);
  const auto moves = legal_pursuer_moves(g, Variant::Zombies, initial_state(g, {0, 0}, 2));
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0], (std::vector<Vertex>{1, 1}));
  // Antipodal: two closer neighbors each, three distinct multisets.
  EXPECT_EQ(legal_pursuer_moves(g, Variant::Zombies, initial_state(g, {0, 0}, 3)).size(), 3u);
}

TEST(SurvivorMoves, DegreePlusOne) {
  const Graph q3 = build_hypercube(3);
  GameState s{{7}, 0, Side::Evader};
  const auto moves = legal_survivor_moves(q3, s);
  EXPECT_EQ(moves.size(), 4u);
  for (Vertex v : moves) EXPECT_TRUE(q3.valid(v));
}

TEST(Capture, BothSidesCanCapture) {
  const Graph g = build_path(3);
  GameState s = initial_state(g, {0}, 1);
  EXPECT_TRUE(is_capture(apply_pursuer_move(g, Variant::Zombies, s, PursuerMove{{0, 1}})));

  GameState e{{1}, 2, Side::Evader};
  EXPECT_TRUE(is_capture(apply_survivor_move(g, e, 1)));
  EXPECT_FALSE(is_capture(GameState{{1}, 2, Side::Pursuer}));
}

TEST(ApplyMove, IllegalMovesAreRejected) {
  const Graph g = build_path(4);
  const GameState s = initial_state(g, {0}, 3);
  EXPECT_THROW(apply_pursuer_move(g, Variant::Zombies, s, PursuerMove{{0, 0}}), IllegalMove);  // zombies must move
  EXPECT_THROW(apply_pursuer_move(g, Variant::Cops, s, PursuerMove{{0, 2}}), IllegalMove);
  EXPECT_THROW(apply_pursuer_move(g, Variant::Cops, s, PursuerMove{{1, 2}}), IllegalMove);
  EXPECT_NO_THROW(apply_pursuer_move(g, Variant::Cops, s, PursuerMove{{0, 0}}));
  GameState e{{0}, 3, Side::Evader};
  EXPECT_THROW(apply_survivor_move(g, e, 1), IllegalMove);
}

TEST(ApplyMove, ZombieLegalityUsesPreTurnSurvivor) {
  const Graph g = build_cycle(5);
  const GameState s = initial_state(g, {0}, 2);
  EXPECT_TRUE(is_legal_step(g, Variant::Zombies, 0, 1, 2));
  EXPECT_FALSE(is_legal_step(g, Variant::Zombies, 0, 4, 2));
  EXPECT_EQ(apply_pursuer_move(g, Variant::Zombies, s, std::vector<Vertex>{1}).pursuers, std::vector<Vertex>{1});
}

TEST(InitialState, Setup) {
  const Graph g = build_cycle(4);
  EXPECT_TRUE(is_capture(initial_state(g, {2}, 2)));
  const GameState s = initial_state(g, {3, 1, 1}, 0);
  EXPECT_EQ(s.to_move, Side::Pursuer);
  EXPECT_EQ(s.pursuers, (std::vector<Vertex>{1, 1, 3}));
  EXPECT_THROW(initial_state(g, {9}, 0), IllegalMove);
}

TEST(Invariants, ZombiesAlwaysHaveAStrictlyCloserMove) {
  for (const auto& [name, g] : fixtures::medium_corpus()) {
    for (Vertex p = 0; p < static_cast<Vertex>(g.order()); ++p) {
      for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
        if (p == s) continue;
        const auto opts = pursuer_options(g, Variant::Zombies, p, s);
        ASSERT_FALSE(opts.empty()) << name;
        for (Vertex w : opts) ASSERT_EQ(g.distance(w, s), g.distance(p, s) - 1) << name;
      }
    }
  }
}

TEST(Invariants, MovesKeepStatesCanonical) {
  const Graph g = build_G5();
  const GameState s = initial_state(g, {14, 3}, 7);
  for (const auto& next : legal_pursuer_moves(g, Variant::Cops, s)) {
    EXPECT_TRUE(std::is_sorted(next.begin(), next.end()));
    for (Vertex v : next) EXPECT_TRUE(g.valid(v));
  }
}

TEST(Match, ZombieCatchesStationarySurvivorOnK2) {
  const Graph g = build_complete(2);
  const Trace t = play_match(g, Variant::Zombies, GreedyZombies(g, {0}), StationarySurvivor(1), 5);
  EXPECT_TRUE(t.captured);
  EXPECT_EQ(t.capture_turn, 1);
}

TEST(Match, ZeroTurnsSurvivesTheBound) {
  const Graph g = build_cycle(6);
  const Trace t = play_match(g, Variant::Zombies, GreedyZombies(g, {0}), StationarySurvivor(3), 0);
  EXPECT_FALSE(t.captured);
  EXPECT_EQ(t.capture_turn, -1);
  EXPECT_EQ(t.plies.size(), 1u);
}

TEST(Match, TraceLengthAndJsonl) {
  const Graph g = build_cycle(8);
  const int bound = 6;
  const Trace t = play_match(g, Variant::Zombies, GreedyZombies(g, {0}), RandomSurvivor(g, 3), bound);
  EXPECT_LE(t.plies.size(), static_cast<std::size_t>(2 * bound + 1));
  const std::string jsonl = trace_to_jsonl(t);
  std::size_t lines = 0, pos = 0;
  while ((pos = jsonl.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  EXPECT_EQ(lines, t.plies.size());
  const auto first = nlohmann::json::parse(jsonl.substr(0, jsonl.find('\n')));
  EXPECT_EQ(first["turn"], 0);
  for (const char* key : {"turn", "side", "pursuers", "survivor", "event"}) EXPECT_TRUE(first.contains(key));
}

TEST(Match, IllegalPolicyMoveNamesTheSide) {
  class Lazy : public PursuerPolicy {
   public:
    std::string name() const override { return "lazy"; }
    std::vector<Vertex> place() const override { return {0}; }
    Memory start(const GameState&) const override { return {}; }
    PursuerDecision decide(const Memory& m, const GameState&) const override { return {{{0, 0}}, m}; }
  };
  const Graph g = build_path(4);
  try {
    play_match(g, Variant::Zombies, Lazy(), StationarySurvivor(3), 3);
    FAIL() << "expected an illegal move";
  } catch (const IllegalMove& e) {
    EXPECT_NE(std::string(e.what()).find("lazy"), std::string::npos);
  }
}

TEST(Variant, Parsing) {
  EXPECT_EQ(parse_variant("cops"), Variant::Cops);
  EXPECT_EQ(parse_variant("zombies"), Variant::Zombies);
  EXPECT_EQ(to_string(Variant::Zombies), "zombies");
  EXPECT_THROW(parse_variant("robots"), Error);
}

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class Variant : std::uint8_t { Cops, Zombies };
enum class Side : std::uint8_t { Pursuer, Evader };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

// Pursuers form a multiset kept in sorted order; several may share a vertex.
struct GameState {
  std::vector<Vertex> pursuers;
  Vertex survivor = 0;
  Side to_move = Side::Pursuer;

  friend bool operator==(const GameState&, const GameState&) = default;
};

std::string describe(const GameState& s);

bool is_capture(const GameState& s);

// Pursuers place first, then the survivor; pursuers move first. A survivor
// placed on a pursuer is caught at setup.
GameState initial_state(const Graph& g, std::vector<Vertex> placement, Vertex survivor);

// Destinations available to one pursuer at p. Cops: stay or any neighbor.
// Zombies: neighbors one step closer to the survivor.
std::vector<Vertex> pursuer_options(const Graph& g, Variant variant, Vertex p, Vertex survivor);
bool is_legal_step(const Graph& g, Variant variant, Vertex from, Vertex to, Vertex survivor);

// Distinct sorted pursuer multisets reachable in one pursuer turn. Every
// pursuer moves within the turn; legality is judged against the survivor's
// position at the start of the turn.
std::vector<std::vector<Vertex>> legal_pursuer_moves(const Graph& g, Variant variant, const GameState& s);

// The survivor may stay or step to a neighbor, in both variants.
std::vector<Vertex> legal_survivor_moves(const Graph& g, const GameState& s);

struct Step {
  Vertex from;
  Vertex to;
};
using PursuerMove = std::vector<Step>;

// Validate and apply; IllegalMove on any rule violation.
GameState apply_pursuer_move(const Graph& g, Variant variant, const GameState& s, const PursuerMove& move);
GameState apply_pursuer_move(const Graph& g, Variant variant, const GameState& s, const std::vector<Vertex>& next);
GameState apply_survivor_move(const Graph& g, const GameState& s, Vertex to);

// Strategies are pure: whatever they need to remember lives in Memory, which
// the caller threads through successive decisions. This is what lets the
// validators enumerate (memory, state) pairs exhaustively.
using Memory = std::vector<std::int32_t>;

struct PursuerDecision {
  PursuerMove move;
  Memory memory;
};

struct EvaderDecision {
  Vertex to;
  Memory memory;
};

class PursuerPolicy {
 public:
  virtual ~PursuerPolicy() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Vertex> place() const = 0;
  virtual Memory start(const GameState& initial) const = 0;
  virtual PursuerDecision decide(const Memory& memory, const GameState& s) const = 0;
};

class EvaderPolicy {
 public:
  virtual ~EvaderPolicy() = default;
  virtual std::string name() const = 0;
  virtual Vertex place(const std::vector<Vertex>& pursuers) const = 0;
  virtual Memory start(const GameState& initial) const = 0;
  virtual EvaderDecision decide(const Memory& memory, const GameState& s) const = 0;
};

struct TracePly {
  int turn = 0;
  Side side = Side::Pursuer;
  std::vector<Vertex> pursuers;
  Vertex survivor = 0;
  bool capture = false;
};

struct Trace {
  std::vector<TracePly> plies;
  bool captured = false;
  int capture_turn = -1;  // pursuer-turn count at capture; -1 when the bound was reached
};

// Setup is recorded as turn 0; each later turn is a pursuer ply then an
// evader ply, up to max_turns turns.
Trace play_match(const Graph& g, Variant variant, const PursuerPolicy& pursuer, const EvaderPolicy& evader,
                 int max_turns);
Trace play_from(const Graph& g, Variant variant, const PursuerPolicy& pursuer, const EvaderPolicy& evader,
                const GameState& initial, int max_turns);

// One JSON object per ply:
// {"turn":int,"side":"P"|"E","pursuers":[int],"survivor":int,"event":"move"|"capture"}
std::string trace_to_jsonl(const Trace& trace);

}  // namespace pursuit

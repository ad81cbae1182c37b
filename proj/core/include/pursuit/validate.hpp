#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

enum class Objective : std::uint8_t { CaptureAll, SafetyForever };
enum class VerdictResult : std::uint8_t { Holds, Refuted, BudgetExceeded };

std::string_view to_string(Objective o);
Objective parse_objective(std::string_view text);  // "capture-all" | "safety"
std::string_view to_string(VerdictResult r);

struct Verdict {
  Objective objective = Objective::CaptureAll;
  VerdictResult result = VerdictResult::Holds;
  std::uint64_t states_explored = 0;
  std::string reason;                        // why a refutation or budget stop happened
  std::vector<GameState> counterexample;     // play from an initial state to the failure
  int max_pursuer_turns = -1;                // CaptureAll: longest play, in pursuer turns

  bool holds() const { return result == VerdictResult::Holds; }
};

// {"objective","result","statesExplored","reason"?,"maxPursuerTurns"?,"counterexampleTrace"?}
std::string verdict_to_json(const Verdict& v);

struct ValidationOptions {
  std::uint64_t budget = 50'000'000;        // product-graph nodes
  std::vector<GameState> initial_states;     // empty: derived from the policy's placement
  int pursuer_count = 0;                     // evader validation without initial states
};

// Exhaustive check of a scripted side against every opponent reply. Nodes
// are (policy memory, game state). CaptureAll: every play reaches capture,
// i.e. no capture-free cycle. SafetyForever: no capture is reachable.
// OffScript and IllegalMove raised while expanding a node are refutations.
//
// Default initial states: for a pursuer policy its placement against every
// survivor start; for an evader policy every pursuer multiset with the
// policy's chosen start.
Verdict validate_pursuer_policy(const Graph& g, Variant variant, const PursuerPolicy& policy, Objective objective,
                                const ValidationOptions& options = {});
Verdict validate_evader_policy(const Graph& g, Variant variant, const EvaderPolicy& policy, Objective objective,
                               const ValidationOptions& options = {});

}  // namespace pursuit

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copwin/capture.hpp"
#include "copwin/graph.hpp"

namespace copwin {

enum class Mover { robber, cop };

// A pursuit position. A round is one robber half-move followed by one cop
// half-move; `round` counts completed rounds.
struct GameState {
    int cop = 0;
    int robber = 0;
    Mover to_move = Mover::robber;
    int round = 0;
};

struct HalfMove {
    Mover mover;
    int from;
    int to;
};

// A recorded play-out. Half-moves alternate robber/cop starting with the
// robber; `rounds` is the capture round, or the number of rounds survived.
struct Trace {
    GameState initial;
    std::vector<HalfMove> moves;
    bool captured = false;
    int rounds = 0;
};

struct RobberPolicy {
    enum class Kind { optimal, random };
    Kind kind = Kind::optimal;
    std::uint64_t seed = 0;

    static RobberPolicy optimal() { return {}; }
    static RobberPolicy random(std::uint64_t seed) {
        return {Kind::random, seed};
    }
};

// Cop half-move: some y in N[cop] minimizing eta(robber, y), ties broken by
// the smallest vertex id. Adjacent robber means capture (eta 0 is the
// unique minimum). If the positions are equal, returns cop's own vertex.
int cop_strategy(const CaptureTable& t, int robber, int cop);

// Robber half-move: some x in N[robber] other than the cop's vertex
// maximizing min over y in N[cop] of eta(x, y), with `never` as the
// maximum; ties broken by the smallest vertex id. Pre: positions distinct.
int robber_strategy(const CaptureTable& t, int robber, int cop);

// Alternating half-moves starting with the robber; capture is checked after
// every half-move and the round counter increments after each cop
// half-move. With both players optimal and finite eta(robber0, cop0), the
// outcome is capture at round exactly eta(robber0, cop0).
Trace simulate(const CaptureTable& t, int robber0, int cop0, int max_rounds,
               RobberPolicy policy = RobberPolicy::optimal());
Trace simulate(const CaptureTable& t, const std::string& robber0, const std::string& cop0,
               int max_rounds, RobberPolicy policy = RobberPolicy::optimal());

// One half-move per line: "round k: robber/cop a -> b", preceded by the
// initial position and followed by the outcome.
std::string render_trace(const Graph& g, const Trace& trace);

// Independent oracle: backward induction over (robber, cop, to_move)
// states, iterated Bellman-style to a fixpoint, entirely separate from the
// relational engine. Returns eta values robber-major; states that never
// converge below max_value are `never`. max_value < 0 selects the default
// n(n-1)+1; an explicit max_value must be >= n(n-1).
std::vector<CaptureValue> brute_force_table(const Graph& g, std::int64_t max_value = -1);

}  // namespace copwin

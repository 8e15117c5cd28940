#include "copwin/game.hpp"

#include <algorithm>
#include <random>

#include "copwin/errors.hpp"

namespace copwin {

namespace {

void check_vertex(const CaptureTable& t, int v) {
    if (v < 0 || v >= t.order()) throw domain_error("vertex id out of range");
}

// min over y in N[cop] of eta(x, y): the cop's best answer to a robber
// standing on x.
CaptureValue best_response(const CaptureTable& t, int x, int cop) {
    CaptureValue best = CaptureValue::never();
    for (int y : t.graph().closed_neighborhood(cop)) best = std::min(best, t.eta(x, y));
    return best;
}

}  // namespace

int cop_strategy(const CaptureTable& t, int robber, int cop) {
    check_vertex(t, robber);
    check_vertex(t, cop);
    if (robber == cop) return cop;
    int choice = -1;
    CaptureValue best = CaptureValue::never();
    for (int y : t.graph().closed_neighborhood(cop)) {
        CaptureValue score = t.eta(robber, y);
        if (choice < 0 || score < best) {
            choice = y;
            best = score;
        }
    }
    return choice;
}

int robber_strategy(const CaptureTable& t, int robber, int cop) {
    check_vertex(t, robber);
    check_vertex(t, cop);
    if (robber == cop) throw domain_error("robber_strategy requires distinct positions");
    int choice = -1;
    CaptureValue best = CaptureValue::finite(0);
    for (int x : t.graph().closed_neighborhood(robber)) {
        if (x == cop) continue;
        CaptureValue score = best_response(t, x, cop);
        if (choice < 0 || score > best) {
            choice = x;
            best = score;
        }
    }
    return choice;  // staying put is always available, so choice >= 0
}

Trace simulate(const CaptureTable& t, int robber0, int cop0, int max_rounds,
               RobberPolicy policy) {
    check_vertex(t, robber0);
    check_vertex(t, cop0);
    if (max_rounds < 1) throw domain_error("max_rounds must be >= 1");

    Trace trace;
    trace.initial = GameState{cop0, robber0, Mover::robber, 0};
    if (robber0 == cop0) {
        trace.captured = true;
        trace.rounds = 0;
        return trace;
    }

    std::mt19937_64 rng(policy.seed);
    int robber = robber0;
    int cop = cop0;
    for (int round = 1; round <= max_rounds; ++round) {
        int to;
        if (policy.kind == RobberPolicy::Kind::optimal) {
            to = robber_strategy(t, robber, cop);
        } else {
            auto options = t.graph().closed_neighborhood(robber);
            to = options[static_cast<std::size_t>(rng() % options.size())];
        }
        trace.moves.push_back({Mover::robber, robber, to});
        robber = to;
        if (robber == cop) {
            trace.captured = true;
            trace.rounds = round;
            return trace;
        }

        to = cop_strategy(t, robber, cop);
        trace.moves.push_back({Mover::cop, cop, to});
        cop = to;
        if (cop == robber) {
            trace.captured = true;
            trace.rounds = round;
            return trace;
        }
    }
    trace.captured = false;
    trace.rounds = max_rounds;
    return trace;
}

Trace simulate(const CaptureTable& t, const std::string& robber0, const std::string& cop0,
               int max_rounds, RobberPolicy policy) {
    return simulate(t, t.graph().index_of(robber0), t.graph().index_of(cop0), max_rounds,
                    policy);
}

std::string render_trace(const Graph& g, const Trace& trace) {
    std::string out = "initial: robber=" + g.label(trace.initial.robber) +
                      " cop=" + g.label(trace.initial.cop) + "\n";
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
        const auto& m = trace.moves[i];
        int round = static_cast<int>(i / 2) + 1;
        out += "round " + std::to_string(round) + ": " +
               (m.mover == Mover::robber ? "robber " : "cop ") + g.label(m.from) + " -> " +
               g.label(m.to) + "\n";
    }
    if (trace.captured)
        out += "captured at round " + std::to_string(trace.rounds) + "\n";
    else
        out += "survived " + std::to_string(trace.rounds) + " rounds\n";
    return out;
}

std::vector<CaptureValue> brute_force_table(const Graph& g, std::int64_t max_value) {
    const int n = g.order();
    if (n < 1) throw domain_error("brute force table requires at least one vertex");
    if (!g.is_connected()) throw domain_error("brute force table requires a connected graph");
    const std::int64_t bound = static_cast<std::int64_t>(n) * (n - 1);
    if (max_value < 0)
        max_value = bound + 1;
    else if (max_value < bound)
        throw domain_error("max_value must be at least n(n-1)");

    constexpr std::int64_t kInf = INT64_C(1) << 40;
    std::vector<std::vector<int>> closed;
    closed.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) closed.push_back(g.closed_neighborhood(v));

    auto idx = [n](int u, int v) {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(v);
    };
    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

    // robber_val: robber to move; cop_val: cop to move. Values start at the
    // top and only ever decrease, so the iteration terminates at a fixpoint.
    std::vector<std::int64_t> robber_val(pairs, kInf);
    std::vector<std::int64_t> cop_val(pairs, kInf);
    for (int v = 0; v < n; ++v) robber_val[idx(v, v)] = cop_val[idx(v, v)] = 0;

    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                std::int64_t best = kInf;
                for (int y : closed[static_cast<std::size_t>(v)]) {
                    std::int64_t after = (y == u) ? 0 : robber_val[idx(u, y)];
                    best = std::min(best, after);
                }
                std::int64_t next = best >= kInf ? kInf : best + 1;
                if (next < cop_val[idx(u, v)]) {
                    cop_val[idx(u, v)] = next;
                    changed = true;
                }
            }
        }
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                std::int64_t worst = 0;
                for (int x : closed[static_cast<std::size_t>(u)]) {
                    std::int64_t after = (x == v) ? 0 : cop_val[idx(x, v)];
                    worst = std::max(worst, after);
                }
                if (worst < robber_val[idx(u, v)]) {
                    robber_val[idx(u, v)] = worst;
                    changed = true;
                }
            }
        }
    }

    std::vector<CaptureValue> out(pairs, CaptureValue::never());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (robber_val[idx(u, v)] < max_value)
                out[idx(u, v)] = CaptureValue::finite(robber_val[idx(u, v)]);
    return out;
}

}  // namespace copwin

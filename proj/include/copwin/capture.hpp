#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "copwin/graph.hpp"

namespace copwin {

// A capture value: a non-negative round count, or `never` for pairs that
// never enter the relation. `never` compares greater than every integer.
class CaptureValue {
public:
    constexpr CaptureValue() : v_(0) {}

    static constexpr CaptureValue finite(std::int64_t n) { return CaptureValue(n); }
    static constexpr CaptureValue never() { return CaptureValue(kNever); }

    constexpr bool is_never() const { return v_ == kNever; }
    constexpr std::int64_t value() const { return v_; }  // pre: !is_never()

    friend constexpr auto operator<=>(CaptureValue a, CaptureValue b) = default;

private:
    static constexpr std::int64_t kNever = INT64_MAX;
    explicit constexpr CaptureValue(std::int64_t v) : v_(v) {}
    std::int64_t v_;
};

std::string to_string(CaptureValue v);  // "never" or the number
std::ostream& operator<<(std::ostream& os, CaptureValue v);

// The saturated relation tower of a finite connected graph: per ordered
// pair (robber u, cop v) the level eta(u,v) at which the pair enters, the
// stabilization level rho, and the cop-win flag.
class CaptureTable {
public:
    const Graph& graph() const { return graph_; }
    int order() const { return graph_.order(); }

    CaptureValue eta(int robber, int cop) const {
        return eta_[static_cast<std::size_t>(robber) * static_cast<std::size_t>(order()) +
                    static_cast<std::size_t>(cop)];
    }
    CaptureValue eta(const std::string& robber, const std::string& cop) const {
        return eta(graph_.index_of(robber), graph_.index_of(cop));
    }

    // Least t with step_t = step_{t+1}; equals the maximum finite eta.
    int rho() const { return rho_; }
    // True iff every ordered pair has finite eta.
    bool copwin() const { return copwin_; }

    // sup over robbers u of eta(u, v).
    CaptureValue eta_of_vertex(int cop) const;
    CaptureValue eta_of_vertex(const std::string& cop) const;
    // min over cops v of eta_of_vertex(v); the capture time when finite.
    CaptureValue eta_of_graph() const;
    // Optimal cop starts {v : eta_of_vertex(v) = eta_of_graph()}, labels
    // sorted lexicographically. Pre: copwin.
    std::vector<std::string> theta() const;

private:
    friend CaptureTable compute_capture_table(const Graph&);
    friend CaptureTable compute_capture_table_reference(const Graph&);

    CaptureTable(Graph g, std::vector<CaptureValue> eta, int rho, bool copwin);

    Graph graph_;
    std::vector<CaptureValue> eta_;  // robber-major, order() x order()
    int rho_;
    bool copwin_;
};

// Production kernel: level-synchronous saturation over a dense pair matrix,
// processing only pairs whose neighborhood condition may have newly become
// true; within a level the pair checks run in parallel (OpenMP when
// enabled). Requires a connected graph with at least one vertex.
CaptureTable compute_capture_table(const Graph& g);

// Serial reference: rescans every unrelated pair at every level, a direct
// transcription of the relation definition. Kept for tests and benchmarks;
// produces an identical table.
CaptureTable compute_capture_table_reference(const Graph& g);

}  // namespace copwin

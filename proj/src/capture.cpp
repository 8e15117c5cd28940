#include "copwin/capture.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "copwin/errors.hpp"

namespace copwin {

std::string to_string(CaptureValue v) {
    return v.is_never() ? "never" : std::to_string(v.value());
}

std::ostream& operator<<(std::ostream& os, CaptureValue v) { return os << to_string(v); }

CaptureTable::CaptureTable(Graph g, std::vector<CaptureValue> eta, int rho, bool copwin)
    : graph_(std::move(g)), eta_(std::move(eta)), rho_(rho), copwin_(copwin) {}

CaptureValue CaptureTable::eta_of_vertex(int cop) const {
    CaptureValue worst = CaptureValue::finite(0);
    for (int u = 0; u < order(); ++u) worst = std::max(worst, eta(u, cop));
    return worst;
}

CaptureValue CaptureTable::eta_of_vertex(const std::string& cop) const {
    return eta_of_vertex(graph_.index_of(cop));
}

CaptureValue CaptureTable::eta_of_graph() const {
    CaptureValue best = CaptureValue::never();
    for (int v = 0; v < order(); ++v) best = std::min(best, eta_of_vertex(v));
    return best;
}

std::vector<std::string> CaptureTable::theta() const {
    if (!copwin_) throw domain_error("theta is only defined for cop-win graphs");
    CaptureValue target = eta_of_graph();
    std::vector<std::string> out;
    for (int v = 0; v < order(); ++v)
        if (eta_of_vertex(v) == target) out.push_back(graph_.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct PairState {
    int n = 0;
    std::vector<std::vector<int>> closed;  // closed neighborhoods, ascending ids
    std::vector<CaptureValue> eta;         // robber-major

    explicit PairState(const Graph& g) : n(g.order()) {
        if (n < 1) throw domain_error("capture table requires at least one vertex");
        if (!g.is_connected()) throw domain_error("capture table requires a connected graph");
        closed.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) closed.push_back(g.closed_neighborhood(v));
        eta.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                   CaptureValue::never());
        for (int v = 0; v < n; ++v) at(v, v) = CaptureValue::finite(0);
    }

    CaptureValue& at(int u, int v) {
        return eta[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(v)];
    }
    CaptureValue get(int u, int v) const {
        return eta[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(v)];
    }

    // Defining condition for (u,v) to enter the next level: every robber
    // move x in N[u] is answered by some y in N[v] already related.
    bool condition(int u, int v) const {
        for (int x : closed[static_cast<std::size_t>(u)]) {
            bool answered = false;
            for (int y : closed[static_cast<std::size_t>(v)]) {
                if (!get(x, y).is_never()) {
                    answered = true;
                    break;
                }
            }
            if (!answered) return false;
        }
        return true;
    }
};

}  // namespace

CaptureTable compute_capture_table(const Graph& g) {
    PairState s(g);
    const int n = s.n;

    // Frontier = pairs that entered at the previous level. A pair (u,v) can
    // first satisfy the condition at level t+1 only if some (x,y) with
    // u in N[x], v in N[y] entered at exactly level t, so the candidate set
    // below is complete.
    std::vector<std::pair<int, int>> frontier;
    frontier.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) frontier.emplace_back(v, v);

    std::vector<int> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> candidates;
    std::vector<char> passed;
    std::size_t related = static_cast<std::size_t>(n);
    int level = 0;
    int rho = 0;

    while (!frontier.empty()) {
        ++level;
        candidates.clear();
        for (const auto& [x, y] : frontier) {
            for (int u : s.closed[static_cast<std::size_t>(x)]) {
                for (int v : s.closed[static_cast<std::size_t>(y)]) {
                    std::size_t idx = static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                                      static_cast<std::size_t>(v);
                    if (!s.eta[idx].is_never() || seen[idx] == level) continue;
                    seen[idx] = level;
                    candidates.emplace_back(u, v);
                }
            }
        }

        passed.assign(candidates.size(), 0);
        const std::int64_t count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < count; ++i) {
            const auto& [u, v] = candidates[static_cast<std::size_t>(i)];
            passed[static_cast<std::size_t>(i)] = s.condition(u, v) ? 1 : 0;
        }

        frontier.clear();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (!passed[i]) continue;
            const auto& [u, v] = candidates[i];
            s.at(u, v) = CaptureValue::finite(level);
            frontier.emplace_back(u, v);
            ++related;
        }
        if (!frontier.empty()) rho = level;
    }

    const bool copwin =
        related == static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    return CaptureTable(g, std::move(s.eta), rho, copwin);
}

CaptureTable compute_capture_table_reference(const Graph& g) {
    PairState s(g);
    const int n = s.n;

    std::vector<std::pair<int, int>> added;
    std::size_t related = static_cast<std::size_t>(n);
    int level = 0;
    int rho = 0;

    while (true) {
        ++level;
        added.clear();
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (!s.get(u, v).is_never()) continue;
                if (s.condition(u, v)) added.emplace_back(u, v);
            }
        }
        if (added.empty()) break;
        for (const auto& [u, v] : added) s.at(u, v) = CaptureValue::finite(level);
        related += added.size();
        rho = level;
    }

    const bool copwin =
        related == static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    return CaptureTable(g, std::move(s.eta), rho, copwin);
}

}  // namespace copwin

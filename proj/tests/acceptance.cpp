// Acceptance suite: one criterion per numbered check, one pass/fail line
// each. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "copwin/capture.hpp"
#include "copwin/cli.hpp"
#include "copwin/game.hpp"
#include "copwin/generators.hpp"
#include "copwin/graph.hpp"
#include "copwin/ordinal.hpp"
#include "copwin/symbolic.hpp"
#include "testutil.hpp"

using namespace copwin;

namespace {

struct failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw failure(msg);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion bodies -------------------------------------------------

void criterion_figure_one() {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    int code = run_cli({"analyze", "--gen", "spider:1,2,3"}, out, err);
    require(code == 0, "analyze exited with " + std::to_string(code));
    const std::string text = out.str();
    for (const char* needle : {"rho: 5\n", "eta: 3\n", "theta: {r, x3.1}\n"})
        require(text.find(needle) != std::string::npos,
                std::string("missing '") + needle + "' in analyze output");
    double elapsed = seconds_since(start);
    require(elapsed < 1.0, "took " + std::to_string(elapsed) + "s, bound is 1s");
}

void criterion_path_family() {
    auto start = std::chrono::steady_clock::now();
    for (int n = 2; n <= 60; ++n) {
        auto t = compute_capture_table(make_path(n));
        require(t.copwin(), "path is cop-win");
        require(t.rho() == n - 1, "rho(P_" + std::to_string(n) + ")");
        require(t.eta_of_graph() == CaptureValue::finite((n - 1 + 1) / 2),
                "eta(P_" + std::to_string(n) + ")");
    }
    double elapsed = seconds_since(start);
    require(elapsed < 10.0, "took " + std::to_string(elapsed) + "s, bound is 10s");
}

void criterion_s_family() {
    double s10_elapsed = 0.0;
    for (int n = 1; n <= 9; ++n) {
        auto start = std::chrono::steady_clock::now();
        auto graph = make_s_tree(n + 1).graph;
        auto t = compute_capture_table(graph);
        if (n == 9) s10_elapsed = seconds_since(start);
        require(t.eta_of_graph() == CaptureValue::finite(n),
                "eta(S_" + std::to_string(n + 1) + ")");
        require(t.rho() == 2 * n - 1, "rho(S_" + std::to_string(n + 1) + ")");
    }
    require(s10_elapsed < 60.0,
            "s:10 took " + std::to_string(s10_elapsed) + "s, bound is 60s");
}

void criterion_tree_laws() {
    std::mt19937_64 rng(1003);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 60);
        Graph tree = testutil::random_tree(rng, n);
        auto t = compute_capture_table(tree);
        require(t.copwin(), "trees are cop-win");
        require(t.eta_of_graph() == CaptureValue::finite(tree.radius()), "eta = radius");
        require(t.rho() == tree.diameter(), "rho = diameter");

        auto center = tree.center();
        std::vector<std::string> center_labels;
        for (int v : center) center_labels.push_back(tree.label(v));
        std::sort(center_labels.begin(), center_labels.end());
        require(t.theta() == center_labels, "theta = center");

        for (int v = 0; v < n; ++v) {
            auto dist = tree.distances_from(v);
            int to_theta = n;
            for (int c : center)
                to_theta = std::min(to_theta, dist[static_cast<std::size_t>(c)]);
            require(t.eta_of_vertex(v) == CaptureValue::finite(tree.radius() + to_theta),
                    "eta(v) = eta(G) + d(v, theta)");
        }
    }
}

std::vector<Graph> oracle_corpus() {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 12; ++n) graphs.push_back(make_path(n));
    for (int n = 3; n <= 12; ++n) graphs.push_back(make_cycle(n));
    for (int n = 1; n <= 12; ++n) graphs.push_back(make_complete(n));
    for (const auto& legs : testutil::partitions_up_to(11)) graphs.push_back(make_spider(legs));
    for (int n = 1; n <= 4; ++n) graphs.push_back(make_tomega(n));
    for (int n = 1; n <= 4; ++n) graphs.push_back(make_s_tree(n).graph);
    for (int n = 2; n <= 4; ++n)
        for (int tail = 0; 2 * n + 4 + tail <= 12; ++tail) graphs.push_back(make_polat(n, tail));

    std::mt19937_64 rng(1005);
    for (int trial = 0; trial < 300; ++trial)
        graphs.push_back(
            testutil::random_connected_graph(rng, 1 + static_cast<int>(rng() % 10)));
    return graphs;
}

void criterion_oracle_equivalence() {
    int graphs_checked = 0;
    for (const Graph& g : oracle_corpus()) {
        auto t = compute_capture_table(g);
        auto oracle = brute_force_table(g);
        const int n = g.order();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                require(t.eta(u, v) ==
                            oracle[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                                   static_cast<std::size_t>(v)],
                        "oracle mismatch at (" + g.label(u) + "," + g.label(v) + ") on graph #" +
                            std::to_string(graphs_checked));
        ++graphs_checked;
    }
    require(graphs_checked >= 300 + 40, "corpus too small");
}

void criterion_tomega_truncations() {
    for (int n = 1; n <= 12; ++n) {
        auto t = compute_capture_table(make_tomega(n));
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= i; ++j) {
                std::string xij = "x" + std::to_string(i) + "." + std::to_string(j);
                require(t.eta(xij, "r") == CaptureValue::finite(i),
                        "eta(" + xij + ", r) on tomega:" + std::to_string(n));
                for (int k = 1; j + k <= i; ++k) {
                    std::string higher =
                        "x" + std::to_string(i) + "." + std::to_string(j + k);
                    require(t.eta(higher, xij) == CaptureValue::finite(i - j),
                            "eta(" + higher + ", " + xij + ")");
                }
            }
        }
    }
}

std::vector<Graph> simulation_corpus() {
    std::vector<Graph> graphs;
    for (const char* spec :
         {"path:2", "path:3", "path:10", "path:60", "path:100", "cycle:3", "cycle:4",
          "cycle:5", "cycle:11", "cycle:30", "complete:2", "complete:10", "complete:50",
          "spider:1,2,3", "spider:3,5,7", "tomega:5", "tomega:18", "s:6", "s:8", "polat:8",
          "polat:48", "polat:20:5"})
        graphs.push_back(generate(spec));
    std::mt19937_64 rng(1007);
    for (int trial = 0; trial < 3; ++trial)
        graphs.push_back(testutil::random_tree(rng, 10 + static_cast<int>(rng() % 50)));
    for (int trial = 0; trial < 5; ++trial)
        graphs.push_back(
            testutil::random_connected_graph(rng, 2 + static_cast<int>(rng() % 9)));
    return graphs;
}

void criterion_simulation_fidelity() {
    std::mt19937_64 rng(1009);
    for (const Graph& g : simulation_corpus()) {
        const int n = g.order();
        require(n <= 200, "corpus graph too large");
        auto t = compute_capture_table(g);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                CaptureValue e = t.eta(u, v);
                int max_rounds = e.is_never() ? 100 : n * (n - 1) + 1;
                Trace trace = simulate(t, u, v, max_rounds);
                if (e.is_never()) {
                    require(!trace.captured, "optimal robber must survive");
                } else {
                    require(trace.captured && trace.rounds == e.value(),
                            "optimal trace length != eta at (" + g.label(u) + "," +
                                g.label(v) + ")");
                }
            }
        }
        for (int seed = 0; seed < 50; ++seed) {
            int u, v;
            do {
                u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
                v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            } while (t.eta(u, v).is_never());
            Trace trace = simulate(t, u, v, n * (n - 1) + 1,
                                   RobberPolicy::random(static_cast<std::uint64_t>(seed)));
            require(trace.captured && trace.rounds <= t.eta(u, v).value(),
                    "random robber escaped past eta");
        }
    }

    auto c4 = compute_capture_table(make_cycle(4));
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v) {
                Trace trace = simulate(c4, u, v, 100);
                require(!trace.captured && trace.rounds == 100,
                        "optimal robber must survive 100 rounds on cycle:4");
            }
}

void criterion_polat_truncations() {
    int prev_rho = -1;
    for (int n = 4; n <= 12; ++n) {
        auto t = compute_capture_table(make_polat(n));
        require(t.copwin(), "polat:" + std::to_string(n) + " must be cop-win");
        require(t.rho() >= prev_rho,
                "rho(polat:" + std::to_string(n) + ") decreased");
        prev_rho = t.rho();
    }
}

void criterion_symbolic_constants() {
    auto report = tomega_report();
    require(report.eta && to_string(*report.eta) == "w", "eta(T_w)");
    require(to_string(report.rho) == "w*2", "rho(T_w)");
    require(to_string(eta_of_S(parse_ordinal("w+1"))) == "w", "eta(S_{w+1})");
    require(to_string(rho_polat_generalized(1, 1)) == "w+1", "polat base rho");
    require(to_string(rho_polat_generalized(2, 3)) == "w*3+5", "polat (2,3) rho");
}

void criterion_classification() {
    auto lt = [](const char* text) { return in_lambda_T(parse_ordinal(text)); };
    auto up = [](const char* text) { return in_upsilon(parse_ordinal(text)); };
    require(lt("5"), "5 in Lambda_T");
    require(!lt("w"), "w not in Lambda_T");
    require(!lt("w+1"), "w+1 not in Lambda_T");
    require(lt("w*2"), "w*2 in Lambda_T");
    require(!lt("w^2"), "w^2 not in Lambda_T");
    require(lt("w^2+w"), "w^2+w in Lambda_T");
    require(up("w+1"), "w+1 in Upsilon");
    require(!up("w"), "w not in Upsilon");
    require(!up("w*2+1"), "w*2+1 not in Upsilon");
    require(up("w*2+3"), "w*2+3 in Upsilon");
    require(up("7"), "7 in Upsilon");
}

void criterion_ordinal_properties() {
    std::mt19937_64 rng(1013);
    for (int i = 0; i < 1000; ++i) {
        Ordinal a = testutil::random_ordinal(rng);
        Ordinal b = testutil::random_ordinal(rng);
        Ordinal c = testutil::random_ordinal(rng);

        require(add(add(a, b), c) == add(a, add(b, c)), "associativity");

        bool lt = a < b, gt = a > b, eq = a == b;
        require((lt ? 1 : 0) + (gt ? 1 : 0) + (eq ? 1 : 0) == 1, "totality");
        require(eq == (b == a), "symmetry of equality");
        if (lt) require(b > a, "antisymmetry");
        if (a <= b && b <= c) require(a <= c, "transitivity");

        auto s = split(a);
        require(add(s.limit_part, Ordinal(s.finite_part)) == a, "split round-trip");
        require(parse_ordinal(to_string(a)) == a, "parse/format identity");
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria = {
        {"figure-1 spider regression (rho=5, eta=3, theta={r, x3.1}, <1s)",
         criterion_figure_one},
        {"path family eta/rho for n=2..60 (<10s)", criterion_path_family},
        {"S family eta/rho for n=1..9, s:10 in <60s", criterion_s_family},
        {"tree laws on 200 random trees (radius/diameter/center/distance)",
         criterion_tree_laws},
        {"brute-force oracle equivalence on the small-instance corpus",
         criterion_oracle_equivalence},
        {"tomega truncation laws for n=1..12", criterion_tomega_truncations},
        {"simulation fidelity (optimal traces, random robbers, cycle:4 survival)",
         criterion_simulation_fidelity},
        {"polat truncations cop-win with nondecreasing rho", criterion_polat_truncations},
        {"symbolic constants string-exact", criterion_symbolic_constants},
        {"lambda_T / upsilon classification table", criterion_classification},
        {"ordinal arithmetic properties on 1000 random triples",
         criterion_ordinal_properties},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            criteria[i].body();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failed;
        }
        std::ostringstream line;
        line << "[" << verdict << "] criterion " << (i + 1) << ": " << criteria[i].name << " ("
             << std::fixed << std::setprecision(2) << seconds_since(start) << "s)";
        if (!detail.empty()) line << " -- " << detail;
        std::cout << line.str() << std::endl;
    }
    std::cout << "acceptance: " << (criteria.size() - static_cast<std::size_t>(failed)) << "/"
              << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}

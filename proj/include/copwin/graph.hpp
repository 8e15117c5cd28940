#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace copwin {

// Finite simple undirected graph with string vertex labels. Vertex ids are
// insertion order (0-based), and every traversal below iterates in that
// order, so all outputs are reproducible.
class Graph {
public:
    Graph() = default;

    // Returns the id of the (possibly pre-existing) vertex.
    int add_vertex(const std::string& label);
    // Auto-declares endpoints. Self-loops are rejected; re-adding an
    // existing edge is a no-op.
    void add_edge(const std::string& a, const std::string& b);
    void add_edge(int a, int b);

    int order() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(std::string_view label) const;
    int index_of(std::string_view label) const;  // throws domain_error if unknown
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Neighbor ids in ascending (= insertion) order.
    const std::vector<int>& neighbors(int v) const;
    // {v} together with its neighbors, ascending ids.
    std::vector<int> closed_neighborhood(int v) const;
    bool adjacent(int a, int b) const;

    // Edges in insertion order, earlier-inserted endpoint first.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // BFS distances from v; -1 for unreachable vertices.
    std::vector<int> distances_from(int v) const;
    int eccentricity(int v) const;  // throws domain_error if disconnected
    int radius() const;
    int diameter() const;
    std::vector<int> center() const;  // min-eccentricity ids, ascending

    bool is_connected() const;  // false for the empty graph
    bool is_tree() const;

private:
    void check_vertex(int v) const;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adjacency_;  // kept sorted ascending
    std::vector<std::pair<int, int>> edges_;
};

struct RootedGraph {
    Graph graph;
    std::string root;
};

// Line-oriented text format:
//   # comment
//   v <label>
//   e <label> <label>
// Labels are whitespace-free tokens. Throws parse_error with line/column.
Graph parse_graph(std::string_view text);

// All v lines in insertion order, then all e lines in insertion order with
// the earlier-inserted endpoint first. parse_graph(serialize(g)) rebuilds g
// with identical ids.
std::string serialize(const Graph& g);

}  // namespace copwin

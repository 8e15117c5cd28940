#include "copwin/graph.hpp"

#include <algorithm>
#include <queue>

#include "copwin/errors.hpp"

namespace copwin {

int Graph::add_vertex(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    if (label.empty()) throw domain_error("vertex label must be nonempty");
    for (char c : label)
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
            throw domain_error("vertex label contains whitespace: '" + label + "'");
    int id = order();
    labels_.push_back(label);
    index_.emplace(label, id);
    adjacency_.emplace_back();
    return id;
}

void Graph::add_edge(const std::string& a, const std::string& b) {
    int ia = add_vertex(a);
    int ib = add_vertex(b);
    add_edge(ia, ib);
}

void Graph::add_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw domain_error("self-loop not allowed: " + label(a));
    if (adjacent(a, b)) return;
    auto& na = adjacency_[static_cast<std::size_t>(a)];
    auto& nb = adjacency_[static_cast<std::size_t>(b)];
    na.insert(std::lower_bound(na.begin(), na.end(), b), b);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    edges_.emplace_back(std::min(a, b), std::max(a, b));
}

bool Graph::has_vertex(std::string_view label) const {
    return index_.find(std::string(label)) != index_.end();
}

int Graph::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) throw domain_error("unknown vertex: " + std::string(label));
    return it->second;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
}

std::vector<int> Graph::closed_neighborhood(int v) const {
    const auto& nb = neighbors(v);
    std::vector<int> out;
    out.reserve(nb.size() + 1);
    out.insert(out.end(), nb.begin(), nb.end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

bool Graph::adjacent(int a, int b) const {
    const auto& na = neighbors(a);
    check_vertex(b);
    return std::binary_search(na.begin(), na.end(), b);
}

std::vector<int> Graph::distances_from(int v) const {
    check_vertex(v);
    std::vector<int> dist(static_cast<std::size_t>(order()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(v)] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adjacency_[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

int Graph::eccentricity(int v) const {
    auto dist = distances_from(v);
    int ecc = 0;
    for (int d : dist) {
        if (d < 0) throw domain_error("graph is not connected");
        ecc = std::max(ecc, d);
    }
    return ecc;
}

int Graph::radius() const {
    if (order() == 0) throw domain_error("graph is empty");
    int r = eccentricity(0);
    for (int v = 1; v < order(); ++v) r = std::min(r, eccentricity(v));
    return r;
}

int Graph::diameter() const {
    if (order() == 0) throw domain_error("graph is empty");
    int d = eccentricity(0);
    for (int v = 1; v < order(); ++v) d = std::max(d, eccentricity(v));
    return d;
}

std::vector<int> Graph::center() const {
    int r = radius();
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        if (eccentricity(v) == r) out.push_back(v);
    return out;
}

bool Graph::is_connected() const {
    if (order() == 0) return false;
    auto dist = distances_from(0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool Graph::is_tree() const { return is_connected() && edge_count() == order() - 1; }

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order()) throw domain_error("vertex id out of range");
}

namespace {

std::vector<std::pair<std::string, std::size_t>> tokenize(std::string_view line) {
    std::vector<std::pair<std::string, std::size_t>> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        tokens.emplace_back(std::string(line.substr(start, i - start)), start + 1);
    }
    return tokens;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    Graph g;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++lineno;
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const auto& [head, head_col] = tokens[0];
        if (head[0] == '#') continue;
        if (head == "v") {
            if (tokens.size() != 2)
                throw parse_error("'v' expects exactly one label", lineno, head_col);
            g.add_vertex(tokens[1].first);
        } else if (head == "e") {
            if (tokens.size() != 3)
                throw parse_error("'e' expects exactly two labels", lineno, head_col);
            if (tokens[1].first == tokens[2].first)
                throw parse_error("self-loop not allowed", lineno, tokens[2].second);
            g.add_edge(tokens[1].first, tokens[2].first);
        } else {
            throw parse_error("unknown directive '" + head + "'", lineno, head_col);
        }
    }
    return g;
}

std::string serialize(const Graph& g) {
    std::string out;
    for (int v = 0; v < g.order(); ++v) {
        out += "v ";
        out += g.label(v);
        out += '\n';
    }
    for (const auto& [a, b] : g.edges()) {
        out += "e ";
        out += g.label(a);
        out += ' ';
        out += g.label(b);
        out += '\n';
    }
    return out;
}

}  // namespace copwin

#include "copwin/generators.hpp"

#include <charconv>
#include <stdexcept>

#include "copwin/errors.hpp"

namespace copwin {

namespace {

std::string num_label(char prefix, int k) { return prefix + std::to_string(k); }

}  // namespace

Graph make_path(int n) {
    if (n < 1) throw domain_error("path:n requires n >= 1");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(num_label('p', i));
    for (int i = 1; i < n; ++i) g.add_edge(num_label('p', i), num_label('p', i + 1));
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw domain_error("cycle:n requires n >= 3");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(num_label('c', i));
    for (int i = 1; i < n; ++i) g.add_edge(num_label('c', i), num_label('c', i + 1));
    g.add_edge(num_label('c', n), num_label('c', 1));
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw domain_error("complete:n requires n >= 1");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(num_label('k', i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(num_label('k', i), num_label('k', j));
    return g;
}

Graph make_spider(const std::vector<int>& leg_lengths) {
    if (leg_lengths.empty()) throw domain_error("spider needs at least one leg");
    Graph g;
    g.add_vertex("r");
    for (std::size_t i = 0; i < leg_lengths.size(); ++i) {
        int len = leg_lengths[i];
        if (len < 1) throw domain_error("spider leg lengths must be >= 1");
        std::string prev = "r";
        for (int j = 1; j <= len; ++j) {
            std::string cur =
                "x" + std::to_string(i + 1) + "." + std::to_string(j);
            g.add_edge(prev, cur);
            prev = cur;
        }
    }
    return g;
}

Graph make_tomega(int n) {
    if (n < 1) throw domain_error("tomega:n requires n >= 1");
    std::vector<int> legs;
    for (int i = 1; i <= n; ++i) legs.push_back(i);
    return make_spider(legs);
}

RootedGraph rooted_sum(const std::vector<RootedGraph>& parts, const std::string& root_label) {
    if (parts.empty()) throw domain_error("rooted_sum needs at least one part");
    Graph g;
    g.add_vertex(root_label);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Graph& part = parts[i].graph;
        const std::string prefix = std::to_string(i) + "/";
        for (int v = 0; v < part.order(); ++v) {
            const std::string fresh = prefix + part.label(v);
            if (g.has_vertex(fresh))
                throw std::logic_error("rooted_sum label collision: " + fresh);
            g.add_vertex(fresh);
        }
        for (const auto& [a, b] : part.edges())
            g.add_edge(prefix + part.label(a), prefix + part.label(b));
        g.add_edge(root_label, prefix + parts[i].root);
    }
    return RootedGraph{std::move(g), root_label};
}

RootedGraph make_s_tree(int n, int max_index) {
    if (n < 1) throw domain_error("s:n requires n >= 1");
    if (n > max_index)
        throw domain_error("s:" + std::to_string(n) + " exceeds the index guard (" +
                           std::to_string(max_index) + ")");
    std::vector<RootedGraph> family;
    Graph single;
    single.add_vertex("r");
    family.push_back(RootedGraph{std::move(single), "r"});
    for (int k = 2; k <= n; ++k)
        family.push_back(rooted_sum(
            std::vector<RootedGraph>(family.begin(), family.begin() + (k - 1)), "r"));
    return family.back();
}

Graph make_polat(int n, int tail) {
    if (n < 2) throw domain_error("polat:n requires n >= 2");
    if (tail < 0) throw domain_error("polat tail must be >= 0");
    Graph g;
    for (int m = 0; m < n; ++m) g.add_vertex(num_label('x', m));
    for (int m = 0; m <= n + 2; ++m) g.add_vertex(num_label('y', m));
    g.add_vertex("z");
    for (int m = 0; m + 1 < n; ++m) g.add_edge(num_label('x', m), num_label('x', m + 1));
    for (int m = 0; m < n; ++m) {
        g.add_edge(num_label('x', m), "z");
        for (int k = 0; k <= 3; ++k) g.add_edge(num_label('x', m), num_label('y', m + k));
    }
    std::string prev = "z";
    for (int t = 1; t <= tail; ++t) {
        std::string cur = num_label('t', t);
        g.add_edge(prev, cur);
        prev = cur;
    }
    return g;
}

namespace {

int parse_int_arg(std::string_view text, std::string_view spec) {
    int value = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw parse_error("bad number '" + std::string(text) + "' in generator spec '" +
                              std::string(spec) + "'",
                          0, 1);
    return value;
}

std::vector<std::string_view> split_on(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(text.substr(pos));
            return out;
        }
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
}

}  // namespace

Graph generate(std::string_view spec) {
    auto parts = split_on(spec, ':');
    const std::string name(parts[0]);
    auto want_args = [&](std::size_t k) {
        if (parts.size() != k + 1)
            throw parse_error("generator '" + name + "' expects " + std::to_string(k) +
                                  " argument(s) in '" + std::string(spec) + "'",
                              0, 1);
    };
    if (name == "path") {
        want_args(1);
        return make_path(parse_int_arg(parts[1], spec));
    }
    if (name == "cycle") {
        want_args(1);
        return make_cycle(parse_int_arg(parts[1], spec));
    }
    if (name == "complete") {
        want_args(1);
        return make_complete(parse_int_arg(parts[1], spec));
    }
    if (name == "spider") {
        want_args(1);
        std::vector<int> legs;
        for (auto leg : split_on(parts[1], ',')) legs.push_back(parse_int_arg(leg, spec));
        return make_spider(legs);
    }
    if (name == "tomega") {
        want_args(1);
        return make_tomega(parse_int_arg(parts[1], spec));
    }
    if (name == "s") {
        want_args(1);
        return make_s_tree(parse_int_arg(parts[1], spec)).graph;
    }
    if (name == "polat") {
        if (parts.size() == 2) return make_polat(parse_int_arg(parts[1], spec));
        if (parts.size() == 3) {
            int tail = parse_int_arg(parts[2], spec);
            if (tail < 1) throw domain_error("polat:n:t requires t >= 1");
            return make_polat(parse_int_arg(parts[1], spec), tail);
        }
        throw parse_error("generator 'polat' expects polat:n or polat:n:t, got '" +
                              std::string(spec) + "'",
                          0, 1);
    }
    throw parse_error("unknown generator '" + name + "'", 0, 1);
}

}  // namespace copwin

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "copwin/graph.hpp"

namespace copwin {

// Named graph families. All vertex labels are deterministic, so identical
// parameters yield byte-identical serialized graphs.

Graph make_path(int n);      // n >= 1, vertices p1..pn
Graph make_cycle(int n);     // n >= 3, vertices c1..cn
Graph make_complete(int n);  // n >= 1, vertices k1..kn

// Root r with k disjoint paths attached; the vertex of path i at depth j is
// labeled x{i}.{j}. Legs must all be >= 1.
Graph make_spider(const std::vector<int>& leg_lengths);

// Finite truncation of the spider with one leg of each length 1..n.
Graph make_tomega(int n);  // n >= 1

// Fresh root adjacent to each part's root. Part vertices are relabeled with
// the prefix "{index}/" (0-based list position) to guarantee disjointness.
RootedGraph rooted_sum(const std::vector<RootedGraph>& parts, const std::string& root_label);

// S_1 is a single vertex; S_n is the rooted sum of S_1..S_{n-1}. Has 2^(n-1)
// vertices, so the index is guarded (default 12, i.e. at most 2048 vertices).
RootedGraph make_s_tree(int n, int max_index = 12);

// Truncation keeping rows x0..x{n-1}, y0..y{n+2}, and z; an optional path of
// `tail` extra vertices t1..t{tail} hangs off z.
Graph make_polat(int n, int tail = 0);  // n >= 2, tail >= 0

// Spec strings: path:n | cycle:n | complete:n | spider:l1,l2,... | tomega:n |
// s:n | polat:n | polat:n:t. Throws parse_error for malformed specs and
// domain_error for out-of-range parameters.
Graph generate(std::string_view spec);

}  // namespace copwin

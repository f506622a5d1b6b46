#pragma once

// Small named graphs shared across the suite. Graphs are built through the
// text parser, so node ids follow first appearance order; use `id()` to map
// an integer label back to its NodeId.

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>

#include "kshell/graph.hpp"

namespace kshell::testing {

inline Graph from_pairs(std::initializer_list<std::pair<int, int>> pairs) {
    std::ostringstream text;
    for (auto [a, b] : pairs) text << a << ' ' << b << '\n';
    std::istringstream in(text.str());
    return Graph::parse_edge_list(in);
}

inline NodeId id(const Graph& g, int label) {
    return g.find_label(std::to_string(label)).value();
}

inline Edge edge(const Graph& g, int a, int b) { return Edge(id(g, a), id(g, b)); }

inline Graph triangle() { return from_pairs({{1, 2}, {2, 3}, {1, 3}}); }

inline Graph path(int n) {
    std::ostringstream text;
    for (int v = 1; v < n; ++v) text << v << ' ' << v + 1 << '\n';
    std::istringstream in(text.str());
    return Graph::parse_edge_list(in);
}

inline Graph cycle(int n) {
    std::ostringstream text;
    for (int v = 1; v < n; ++v) text << v << ' ' << v + 1 << '\n';
    text << n << " 1\n";
    std::istringstream in(text.str());
    return Graph::parse_edge_list(in);
}

inline Graph star(int leaves) {
    std::ostringstream text;
    for (int v = 1; v <= leaves; ++v) text << 0 << ' ' << v << '\n';
    std::istringstream in(text.str());
    return Graph::parse_edge_list(in);
}

inline Graph complete(int n) {
    std::ostringstream text;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) text << a << ' ' << b << '\n';
    std::istringstream in(text.str());
    return Graph::parse_edge_list(in);
}

// Six-node worked example used throughout the rewiring and metric tests.
// Shells: nodes 2, 5, 6 sit in the 2-shell triangle, nodes 1, 3, 4 peel at 1.
// Rewiring away e1 = (1,3), e2 = (4,6) in favour of (1,4), (3,6) changes only
// node 3's shell (1 -> 2), so ASR = 1/6 while two links left the original
// edge set.
inline Graph six_node() {
    return from_pairs({{1, 3}, {2, 5}, {2, 6}, {3, 5}, {4, 6}, {5, 6}});
}

}  // namespace kshell::testing

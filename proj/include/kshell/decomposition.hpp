#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "kshell/errors.hpp"
#include "kshell/graph.hpp"

namespace kshell {

/// Shell index of every node, indexed by NodeId. shell[v] is the largest k
/// such that v belongs to the k-core; isolated nodes get 0.
struct ShellIndex {
    std::vector<int> shell;

    int max_shell() const {
        int best = 0;
        for (int k : shell) best = std::max(best, k);
        return best;
    }

    std::size_t size() const noexcept { return shell.size(); }
    int operator[](NodeId v) const { return shell[v]; }

    friend bool operator==(const ShellIndex&, const ShellIndex&) = default;
};

/// Shell decomposition via the linear-time bucket peel: nodes are processed in
/// increasing order of remaining degree, and each removal decrements the
/// remaining degree of its higher neighbors in place. O(|V| + |E|), which is
/// what keeps full recomputation affordable inside the attack loop.
inline ShellIndex kshell_decompose(const Graph& g) {
    const std::size_t n = g.node_count();
    ShellIndex out;
    out.shell.assign(n, 0);
    if (n == 0) return out;

    std::vector<std::size_t> deg(n);
    std::size_t max_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(NodeId(v));
        max_deg = std::max(max_deg, deg[v]);
    }

    // Counting sort of nodes by degree; bin[d] is the start offset of degree-d
    // nodes in vert.
    std::vector<std::size_t> bin(max_deg + 1, 0);
    for (std::size_t v = 0; v < n; ++v) ++bin[deg[v]];
    std::size_t start = 0;
    for (std::size_t d = 0; d <= max_deg; ++d) {
        const std::size_t count = bin[d];
        bin[d] = start;
        start += count;
    }
    std::vector<NodeId> vert(n);
    std::vector<std::size_t> pos(n);
    for (std::size_t v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = NodeId(v);
    }
    for (std::size_t d = max_deg; d >= 1; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    for (std::size_t i = 0; i < n; ++i) {
        const NodeId v = vert[i];
        out.shell[v] = int(deg[v]);
        for (NodeId u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                // Swap u with the first node of its degree bucket, then shrink
                // its degree by one.
                const std::size_t du = deg[u];
                const std::size_t pu = pos[u];
                const std::size_t pw = bin[du];
                const NodeId w = vert[pw];
                if (u != w) {
                    pos[u] = pw;
                    pos[w] = pu;
                    vert[pu] = w;
                    vert[pw] = u;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    return out;
}

/// Node counts (and fractions of n) per shell value.
struct ShellHistogram {
    std::map<int, std::size_t> counts;
    std::map<int, double> fractions;

    std::size_t count(int k) const {
        auto it = counts.find(k);
        return it == counts.end() ? 0 : it->second;
    }

    double fraction(int k) const {
        auto it = fractions.find(k);
        return it == fractions.end() ? 0.0 : it->second;
    }
};

inline ShellHistogram shell_histogram(const ShellIndex& idx, std::size_t node_count) {
    if (idx.size() != node_count) {
        throw DomainError("shell index covers " + std::to_string(idx.size()) +
                          " nodes, expected " + std::to_string(node_count));
    }
    ShellHistogram h;
    for (int k : idx.shell) ++h.counts[k];
    for (const auto& [k, c] : h.counts) {
        h.fractions[k] = double(c) / double(node_count);
    }
    return h;
}

}  // namespace kshell

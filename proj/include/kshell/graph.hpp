#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kshell/errors.hpp"

namespace kshell {

/// Dense node index in [0, node_count).
using NodeId = std::uint32_t;

/// Unordered pair of distinct nodes. Stored normalized with a < b, so
/// Edge(u, v) == Edge(v, u).
struct Edge {
    NodeId a;
    NodeId b;

    Edge(NodeId u, NodeId v) : a(u < v ? u : v), b(u < v ? v : u) {
        if (u == v) {
            throw PreconditionError("edge endpoints must be distinct (self-loop on node " +
                                    std::to_string(u) + ")");
        }
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept {
        return std::hash<std::uint64_t>{}((std::uint64_t(e.a) << 32) | e.b);
    }
};

/// Undirected simple graph over dense node ids, with original labels kept in a
/// side map. Adjacency lists are kept sorted; the edge list supports O(1)
/// membership tests and uniform sampling by index.
///
/// Single writer: mutation requires exclusive access. Concurrent const access
/// is safe once mutation has stopped.
class Graph {
public:
    Graph() = default;

    /// Graph with `n` isolated nodes labeled "0".."n-1".
    explicit Graph(std::size_t n) : adjacency_(n) {
        labels_.reserve(n);
        for (std::size_t v = 0; v < n; ++v) {
            labels_.push_back(std::to_string(v));
            label_to_id_.emplace(labels_.back(), NodeId(v));
        }
    }

    /// Parses "<label> <label>" edge-list text. Lines starting with '#' or '%'
    /// and blank lines are ignored. Labels are arbitrary whitespace-free
    /// tokens, mapped to dense ids in order of first appearance. Duplicate
    /// edges (including reversed ones) are merged; self-loops are rejected.
    static Graph parse_edge_list(std::istream& in) {
        Graph g;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream tokens(line);
            std::string first, second, extra;
            if (!(tokens >> first)) continue;  // blank
            if (first.front() == '#' || first.front() == '%') continue;
            if (!(tokens >> second)) {
                throw ParseError("expected two node labels, found one", line_no);
            }
            if (tokens >> extra) {
                throw ParseError("expected two node labels, found more", line_no);
            }
            const NodeId u = g.intern_label(first);
            const NodeId v = g.intern_label(second);
            if (u == v) {
                throw ParseError("self-loop on node '" + first + "' is not allowed", line_no);
            }
            if (!g.has_edge(u, v)) g.add_edge(u, v);
        }
        return g;
    }

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::size_t degree(NodeId v) const {
        check_node(v);
        return adjacency_[v].size();
    }

    /// Neighbors of `v`, sorted by id.
    const std::vector<NodeId>& neighbors(NodeId v) const {
        check_node(v);
        return adjacency_[v];
    }

    /// True iff the edge {u, v} is present. Symmetric; false for u == v since
    /// self-loops are never stored.
    bool has_edge(NodeId u, NodeId v) const {
        check_node(u);
        check_node(v);
        if (u == v) return false;
        return edge_index_.contains(Edge(u, v));
    }

    bool has_edge(const Edge& e) const { return has_edge(e.a, e.b); }

    /// Inserts a new edge. The edge must be absent and the endpoints distinct.
    void add_edge(NodeId u, NodeId v) {
        check_node(u);
        check_node(v);
        if (u == v) {
            throw PreconditionError("cannot add self-loop on node " + std::to_string(u));
        }
        Edge e(u, v);
        if (edge_index_.contains(e)) {
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") already present");
        }
        edge_index_.emplace(e, edges_.size());
        edges_.push_back(e);
        insert_sorted(adjacency_[u], v);
        insert_sorted(adjacency_[v], u);
    }

    void add_edge(const Edge& e) { add_edge(e.a, e.b); }

    /// Removes an existing edge.
    void remove_edge(NodeId u, NodeId v) {
        check_node(u);
        check_node(v);
        if (u == v || !edge_index_.contains(Edge(u, v))) {
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") not present");
        }
        Edge e(u, v);
        const std::size_t pos = edge_index_.at(e);
        edge_index_.erase(e);
        if (pos + 1 != edges_.size()) {
            edges_[pos] = edges_.back();
            edge_index_[edges_[pos]] = pos;
        }
        edges_.pop_back();
        erase_sorted(adjacency_[u], v);
        erase_sorted(adjacency_[v], u);
    }

    void remove_edge(const Edge& e) { remove_edge(e.a, e.b); }

    /// Edge at position `i` in the current (mutation-dependent) edge list.
    /// Positions are stable between mutations, which is all uniform sampling
    /// needs.
    const Edge& edge_at(std::size_t i) const {
        if (i >= edges_.size()) {
            throw DomainError("edge index " + std::to_string(i) + " out of range");
        }
        return edges_[i];
    }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::string& label(NodeId v) const {
        check_node(v);
        return labels_[v];
    }

    std::optional<NodeId> find_label(std::string_view label) const {
        auto it = label_to_id_.find(std::string(label));
        if (it == label_to_id_.end()) return std::nullopt;
        return it->second;
    }

    /// Sorted multiset of node degrees.
    std::vector<std::size_t> degree_sequence() const {
        std::vector<std::size_t> degrees;
        degrees.reserve(node_count());
        for (const auto& nbrs : adjacency_) degrees.push_back(nbrs.size());
        std::sort(degrees.begin(), degrees.end());
        return degrees;
    }

    /// Writes one edge per line, sorted by (min, max) endpoint. By default the
    /// endpoints are written as dense ids; with `use_labels` the original
    /// labels are written instead, which keeps node identity across an
    /// attack's input and output files.
    void write_edge_list(std::ostream& out, bool use_labels = false) const {
        std::vector<Edge> sorted = edges_;
        std::sort(sorted.begin(), sorted.end());
        for (const Edge& e : sorted) {
            if (use_labels) {
                out << labels_[e.a] << ' ' << labels_[e.b] << '\n';
            } else {
                out << e.a << ' ' << e.b << '\n';
            }
        }
    }

    /// Equal node count, labels, and edge set.
    bool operator==(const Graph& other) const {
        if (labels_ != other.labels_) return false;
        std::vector<Edge> lhs = edges_, rhs = other.edges_;
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        return lhs == rhs;
    }

private:
    NodeId intern_label(const std::string& label) {
        auto it = label_to_id_.find(label);
        if (it != label_to_id_.end()) return it->second;
        const NodeId id = NodeId(labels_.size());
        labels_.push_back(label);
        label_to_id_.emplace(label, id);
        adjacency_.emplace_back();
        return id;
    }

    void check_node(NodeId v) const {
        if (v >= adjacency_.size()) {
            throw DomainError("node id " + std::to_string(v) + " out of range [0, " +
                              std::to_string(adjacency_.size()) + ")");
        }
    }

    static void insert_sorted(std::vector<NodeId>& values, NodeId v) {
        values.insert(std::lower_bound(values.begin(), values.end(), v), v);
    }

    static void erase_sorted(std::vector<NodeId>& values, NodeId v) {
        values.erase(std::lower_bound(values.begin(), values.end(), v));
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_to_id_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<Edge> edges_;
    std::unordered_map<Edge, std::size_t, EdgeHash> edge_index_;
};

}  // namespace kshell

#pragma once

#include <cstddef>
#include <optional>
#include <unordered_set>

#include "kshell/decomposition.hpp"
#include "kshell/errors.hpp"
#include "kshell/graph.hpp"

namespace kshell {

/// The three attack-quality metrics plus their raw counts. lpn is empty when
/// no node changed shell.
struct MetricReport {
    double asr = 0.0;
    double lcr = 0.0;
    std::optional<double> lpn;
    std::size_t changed_nodes = 0;
    std::size_t changed_links = 0;

    friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

/// Number of nodes whose shell differs between the two indices.
inline std::size_t count_shell_changes(const ShellIndex& before, const ShellIndex& after) {
    if (before.size() != after.size()) {
        throw DomainError("shell indices cover different node sets (" +
                          std::to_string(before.size()) + " vs " + std::to_string(after.size()) +
                          ")");
    }
    std::size_t changed = 0;
    for (std::size_t v = 0; v < before.size(); ++v) {
        if (before.shell[v] != after.shell[v]) ++changed;
    }
    return changed;
}

/// Fraction of nodes whose shell changed in either direction.
inline double attack_success_rate(const ShellIndex& before, const ShellIndex& after) {
    if (before.size() == 0) return 0.0;
    return double(count_shell_changes(before, after)) / double(before.size());
}

/// Number of original links absent from the adversarial graph, |E \ E'|.
inline std::size_t count_changed_links(const Graph& original, const Graph& adversarial) {
    if (original.node_count() != adversarial.node_count()) {
        throw DomainError("graphs cover different node sets (" +
                          std::to_string(original.node_count()) + " vs " +
                          std::to_string(adversarial.node_count()) + " nodes)");
    }
    if (original.edge_count() != adversarial.edge_count()) {
        throw DomainError("edge counts differ (" + std::to_string(original.edge_count()) +
                          " vs " + std::to_string(adversarial.edge_count()) +
                          "); rewiring attacks preserve the link count");
    }
    std::size_t missing = 0;
    for (const Edge& e : original.edges()) {
        if (!adversarial.has_edge(e)) ++missing;
    }
    return missing;
}

/// Fraction of original links no longer present: the attack budget.
inline double link_change_rate(const Graph& original, const Graph& adversarial) {
    if (original.edge_count() == 0) return 0.0;
    return double(count_changed_links(original, adversarial)) / double(original.edge_count());
}

/// Changed links per successfully attacked node; empty when nothing changed.
inline std::optional<double> link_per_node(std::size_t changed_links, std::size_t changed_nodes) {
    if (changed_nodes == 0) return std::nullopt;
    return double(changed_links) / double(changed_nodes);
}

/// Full report from the original graph, its shell index, and the adversarial
/// graph (same node ids). Counts come from graph set differences, not from an
/// incrementally maintained log.
inline MetricReport evaluate_attack(const Graph& original, const ShellIndex& before,
                                    const Graph& adversarial) {
    if (before.size() != original.node_count()) {
        throw DomainError("shell index does not match the original graph");
    }
    const ShellIndex after = kshell_decompose(adversarial);
    MetricReport r;
    r.changed_nodes = count_shell_changes(before, after);
    r.changed_links = count_changed_links(original, adversarial);
    r.asr = original.node_count() == 0 ? 0.0
                                       : double(r.changed_nodes) / double(original.node_count());
    r.lcr = original.edge_count() == 0 ? 0.0
                                       : double(r.changed_links) / double(original.edge_count());
    r.lpn = link_per_node(r.changed_links, r.changed_nodes);
    return r;
}

}  // namespace kshell

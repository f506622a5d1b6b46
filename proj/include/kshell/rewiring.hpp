#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "kshell/errors.hpp"
#include "kshell/graph.hpp"

namespace kshell {

/// The two feasible endpoint pairings when rewiring edges (i,j) and (u,v):
/// case one produces (i,v),(j,u); case two produces (i,u),(j,v).
enum class CaseTag { case_one, case_two };

/// What to do when a selected pair satisfies both cases at once.
enum class BothCasesPolicy {
    prefer_case_one,  // default
    prefer_case_two,
    random_case,
    reject,  // a doubly-feasible pair yields no move
};

struct CaseFeasibility {
    bool case_one = false;
    bool case_two = false;
};

/// Checks both rewiring cases for edges e1 = (i,j) and e2 = (u,v): the new
/// edge pair must be absent from the graph and must not collapse into a
/// self-loop. Requires e1 != e2 and both present.
inline CaseFeasibility check_cases(const Graph& g, const Edge& e1, const Edge& e2) {
    if (e1 == e2) {
        throw PreconditionError("rewiring requires two distinct edges");
    }
    if (!g.has_edge(e1) || !g.has_edge(e2)) {
        throw PreconditionError("rewiring candidates must be present in the graph");
    }
    const NodeId i = e1.a, j = e1.b, u = e2.a, v = e2.b;
    CaseFeasibility f;
    f.case_one = i != v && j != u && !g.has_edge(i, v) && !g.has_edge(j, u);
    f.case_two = i != u && j != v && !g.has_edge(i, u) && !g.has_edge(j, v);
    return f;
}

/// Decides which rewiring case (if any) applies to the edge pair. When both
/// cases hold the policy breaks the tie; `rng` is consulted only by the
/// random policy.
inline std::optional<CaseTag> judge_constraints(const Graph& g, const Edge& e1, const Edge& e2,
                                                BothCasesPolicy policy = BothCasesPolicy::prefer_case_one,
                                                std::mt19937_64* rng = nullptr) {
    const CaseFeasibility f = check_cases(g, e1, e2);
    if (f.case_one && f.case_two) {
        switch (policy) {
            case BothCasesPolicy::prefer_case_one: return CaseTag::case_one;
            case BothCasesPolicy::prefer_case_two: return CaseTag::case_two;
            case BothCasesPolicy::reject: return std::nullopt;
            case BothCasesPolicy::random_case:
                if (rng == nullptr) {
                    throw PreconditionError("random both-cases policy needs a random source");
                }
                return (*rng)() & 1 ? CaseTag::case_two : CaseTag::case_one;
        }
    }
    if (f.case_one) return CaseTag::case_one;
    if (f.case_two) return CaseTag::case_two;
    return std::nullopt;
}

/// A validated pair-of-links edit: two removals and two insertions on the same
/// four endpoints, so every node keeps its degree.
struct RewiringMove {
    std::array<Edge, 2> removed;
    std::array<Edge, 2> added;
    CaseTag tag;

    friend bool operator==(const RewiringMove&, const RewiringMove&) = default;
};

inline RewiringMove make_move(const Edge& e1, const Edge& e2, CaseTag tag) {
    const NodeId i = e1.a, j = e1.b, u = e2.a, v = e2.b;
    if (tag == CaseTag::case_one) {
        return RewiringMove{{e1, e2}, {Edge(i, v), Edge(j, u)}, tag};
    }
    return RewiringMove{{e1, e2}, {Edge(i, u), Edge(j, v)}, tag};
}

/// The move that exactly undoes `m`.
inline RewiringMove inverse(const RewiringMove& m) {
    return RewiringMove{m.added, m.removed, m.tag};
}

/// Edit set of an adversarial graph relative to the original: original edges
/// currently missing, and foreign edges currently present. Moves that restore
/// an original edge (or drop a foreign one) cancel out of the log, so the log
/// always equals the plain set differences E_original \ E_current and
/// E_current \ E_original.
class EditLog {
public:
    void record(const RewiringMove& m) {
        for (const Edge& e : m.removed) {
            if (added_foreign_.erase(e) == 0) removed_original_.insert(e);
        }
        for (const Edge& e : m.added) {
            if (removed_original_.erase(e) == 0) added_foreign_.insert(e);
        }
    }

    const std::unordered_set<Edge, EdgeHash>& removed_original() const noexcept {
        return removed_original_;
    }
    const std::unordered_set<Edge, EdgeHash>& added_foreign() const noexcept {
        return added_foreign_;
    }

    bool empty() const noexcept { return removed_original_.empty() && added_foreign_.empty(); }

    /// Changed original links, which is also the foreign-link count.
    std::size_t changed_links() const noexcept { return removed_original_.size(); }

    bool operator==(const EditLog& other) const {
        return removed_original_ == other.removed_original_ &&
               added_foreign_ == other.added_foreign_;
    }

private:
    std::unordered_set<Edge, EdgeHash> removed_original_;
    std::unordered_set<Edge, EdgeHash> added_foreign_;
};

namespace detail {
inline void validate_move(const Graph& g, const RewiringMove& m) {
    std::array<NodeId, 4> removed_ends{m.removed[0].a, m.removed[0].b, m.removed[1].a,
                                       m.removed[1].b};
    std::array<NodeId, 4> added_ends{m.added[0].a, m.added[0].b, m.added[1].a, m.added[1].b};
    std::sort(removed_ends.begin(), removed_ends.end());
    std::sort(added_ends.begin(), added_ends.end());
    if (removed_ends != added_ends) {
        throw PreconditionError("rewiring move does not preserve node degrees");
    }
    if (m.removed[0] == m.removed[1] || m.added[0] == m.added[1]) {
        throw PreconditionError("rewiring move edges must be distinct");
    }
    if (!g.has_edge(m.removed[0]) || !g.has_edge(m.removed[1]) || g.has_edge(m.added[0]) ||
        g.has_edge(m.added[1])) {
        throw ConflictError("rewiring move is stale: graph changed since validation");
    }
}
}  // namespace detail

/// Applies a validated move. Throws ConflictError if the graph no longer
/// matches the move (removed edges absent or added edges present).
inline void apply_move(Graph& g, const RewiringMove& m) {
    detail::validate_move(g, m);
    g.remove_edge(m.removed[0]);
    g.remove_edge(m.removed[1]);
    g.add_edge(m.added[0]);
    g.add_edge(m.added[1]);
}

inline void apply_move(Graph& g, const RewiringMove& m, EditLog& log) {
    apply_move(g, m);
    log.record(m);
}

/// Draws two distinct edges uniformly at random and judges the constraints.
/// Returns the move, or nothing when the drawn pair is infeasible (the caller
/// retries). Deterministic given the rng state.
inline std::optional<RewiringMove> random_feasible_move(
    const Graph& g, std::mt19937_64& rng,
    BothCasesPolicy policy = BothCasesPolicy::prefer_case_one) {
    const std::size_t m = g.edge_count();
    if (m < 2) {
        throw DomainError("need at least two edges to rewire, have " + std::to_string(m));
    }
    std::uniform_int_distribution<std::size_t> first(0, m - 1);
    std::uniform_int_distribution<std::size_t> second(0, m - 2);
    const std::size_t i = first(rng);
    std::size_t j = second(rng);
    if (j >= i) ++j;
    const Edge e1 = g.edge_at(i);
    const Edge e2 = g.edge_at(j);
    const auto tag = judge_constraints(g, e1, e2, policy, &rng);
    if (!tag) return std::nullopt;
    return make_move(e1, e2, *tag);
}

inline std::string to_string(CaseTag tag) {
    return tag == CaseTag::case_one ? "case-1" : "case-2";
}

inline std::string to_string(BothCasesPolicy policy) {
    switch (policy) {
        case BothCasesPolicy::prefer_case_one: return "prefer-1";
        case BothCasesPolicy::prefer_case_two: return "prefer-2";
        case BothCasesPolicy::random_case: return "random";
        case BothCasesPolicy::reject: return "reject";
    }
    return "prefer-1";
}

inline BothCasesPolicy parse_both_cases_policy(const std::string& text) {
    if (text == "prefer-1") return BothCasesPolicy::prefer_case_one;
    if (text == "prefer-2") return BothCasesPolicy::prefer_case_two;
    if (text == "random") return BothCasesPolicy::random_case;
    if (text == "reject") return BothCasesPolicy::reject;
    throw DomainError("unknown both-cases policy '" + text + "'");
}

}  // namespace kshell

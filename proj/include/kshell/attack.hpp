#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kshell/decomposition.hpp"
#include "kshell/errors.hpp"
#include "kshell/graph.hpp"
#include "kshell/metrics.hpp"
#include "kshell/rewiring.hpp"

namespace kshell {

enum class Strategy { ra, ha, sa };

inline std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::ra: return "ra";
        case Strategy::ha: return "ha";
        case Strategy::sa: return "sa";
    }
    return "ra";
}

inline Strategy parse_strategy(const std::string& text) {
    if (text == "ra") return Strategy::ra;
    if (text == "ha") return Strategy::ha;
    if (text == "sa") return Strategy::sa;
    throw DomainError("unknown attack strategy '" + text + "'");
}

/// One constraint-passing proposal inside an annealing loop, reported to the
/// optional observer. Diagnostic only.
struct AnnealingObservation {
    std::size_t round = 0;       // attacking round, 1-based
    std::size_t tau = 0;         // annealing step, 1-based
    double temperature = 0.0;    // after this step's cooling
    double asr_candidate = 0.0;  // candidate graph vs. the original shells
    double asr_threshold = 0.0;  // value the candidate competed against
    double probability = 1.0;    // acceptance probability actually used
    bool accepted = false;
};

struct AttackConfig {
    Strategy strategy = Strategy::sa;
    std::size_t rounds = 1;
    double initial_temp = 1.0;
    double terminate_temp = 1e-6;
    std::uint64_t seed = 0;
    BothCasesPolicy both_cases = BothCasesPolicy::prefer_case_one;
    double ha_quantile = 0.2;
    std::size_t retry_budget = 1000;
    // When set, every accepted candidate becomes the base for later proposals
    // within the same round, so one round may contribute several rewirings.
    // The default keeps each candidate exactly one rewiring away from the
    // round's starting graph.
    bool compound_moves = false;
    std::function<void(const AnnealingObservation&)> annealing_observer;

    void validate() const {
        if (rounds < 1) throw DomainError("attack rounds must be >= 1");
        if (!(initial_temp > 0.0)) throw DomainError("initial temperature must be positive");
        if (!(terminate_temp > 0.0)) throw DomainError("terminate temperature must be positive");
        if (!(ha_quantile > 0.0) || ha_quantile > 1.0) {
            throw DomainError("ha quantile must lie in (0, 1]");
        }
        if (retry_budget < 1) throw DomainError("retry budget must be >= 1");
    }
};

/// Outcome of an attack run: the adversarial graph, the edit set relative to
/// the original, and the metric trajectory with one entry per executed round.
struct AttackResult {
    Graph final_graph;
    EditLog edit_log;
    std::vector<MetricReport> trajectory;
    AttackConfig config;
    std::size_t accepted_moves = 0;  // acceptance events (ra/ha: every applied move)
    std::size_t proposed_moves = 0;  // constraint-passing candidates considered
};

/// Retry budget exhausted without a feasible link pair. Carries the result as
/// of the last completed round.
class StuckRoundError : public Error {
public:
    StuckRoundError(std::size_t round, AttackResult partial)
        : Error("no feasible link pair found in round " + std::to_string(round) +
                " within the retry budget"),
          partial_(std::move(partial)) {}

    const AttackResult& partial() const noexcept { return partial_; }

private:
    AttackResult partial_;
};

/// Temperature after `tau` cooling steps: T_tau = T / tau!.
inline double annealing_temperature(double initial_temp, std::size_t tau) {
    double factorial = 1.0;
    for (std::size_t t = 1; t <= tau; ++t) factorial *= double(t);
    return initial_temp / factorial;
}

/// Probability of accepting a non-improving candidate: exp(-|delta| / T).
inline double acceptance_probability(double asr_candidate, double asr_threshold,
                                     double temperature) {
    if (asr_candidate == asr_threshold) return 1.0;
    return std::exp(-std::abs(asr_candidate - asr_threshold) / temperature);
}

/// Edge indices whose shell weight k_a + k_b reaches the top (resp. bottom)
/// quantile. Ties at the cut extend the pool, so uniform weights make both
/// pools cover every edge.
struct HeuristicPools {
    std::vector<std::size_t> top;
    std::vector<std::size_t> bottom;
};

inline HeuristicPools heuristic_pools(const Graph& g, const ShellIndex& idx, double quantile) {
    const std::size_t m = g.edge_count();
    std::vector<int> weight(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = g.edge_at(i);
        weight[i] = idx.shell[e.a] + idx.shell[e.b];
    }
    std::vector<int> sorted = weight;
    std::sort(sorted.begin(), sorted.end());
    std::size_t pool_size = std::size_t(std::ceil(quantile * double(m)));
    pool_size = std::max<std::size_t>(1, std::min(pool_size, m));
    const int low_cut = sorted[pool_size - 1];
    const int high_cut = sorted[m - pool_size];
    HeuristicPools pools;
    for (std::size_t i = 0; i < m; ++i) {
        if (weight[i] >= high_cut) pools.top.push_back(i);
        if (weight[i] <= low_cut) pools.bottom.push_back(i);
    }
    return pools;
}

namespace detail {

inline MetricReport round_metrics(const Graph& original, const ShellIndex& base_shells,
                                  const Graph& current) {
    return evaluate_attack(original, base_shells, current);
}

inline AttackResult make_partial(const Graph& work, const EditLog& log,
                                 std::vector<MetricReport> trajectory, const AttackConfig& cfg,
                                 std::size_t accepted, std::size_t proposed) {
    AttackResult partial;
    partial.final_graph = work;
    partial.edit_log = log;
    partial.trajectory = std::move(trajectory);
    partial.config = cfg;
    partial.accepted_moves = accepted;
    partial.proposed_moves = proposed;
    return partial;
}

/// Draws until a feasible pair appears, throwing StuckRoundError after
/// `retry_budget` consecutive infeasible draws.
template <typename DrawPair>
RewiringMove draw_feasible(const Graph& g, const AttackConfig& cfg, std::size_t round,
                           const EditLog& log, const std::vector<MetricReport>& trajectory,
                           std::size_t accepted, std::size_t proposed, DrawPair&& draw) {
    for (std::size_t attempt = 0; attempt < cfg.retry_budget; ++attempt) {
        std::optional<RewiringMove> move = draw();
        if (move) return *move;
    }
    throw StuckRoundError(round,
                          make_partial(g, log, trajectory, cfg, accepted, proposed));
}

}  // namespace detail

/// Random rewiring attack: every round applies one uniformly drawn feasible
/// move unconditionally.
inline AttackResult attack_random(const Graph& original, const AttackConfig& cfg_in) {
    AttackConfig cfg = cfg_in;
    cfg.strategy = Strategy::ra;
    cfg.validate();
    if (original.edge_count() < 2) {
        throw DomainError("random attack needs at least two edges");
    }

    const ShellIndex base_shells = kshell_decompose(original);
    std::mt19937_64 rng(cfg.seed);

    Graph work = original;
    EditLog log;
    AttackResult res;
    res.config = cfg;
    for (std::size_t round = 1; round <= cfg.rounds; ++round) {
        const RewiringMove move = detail::draw_feasible(
            work, cfg, round, log, res.trajectory, res.accepted_moves, res.proposed_moves,
            [&] { return random_feasible_move(work, rng, cfg.both_cases); });
        ++res.proposed_moves;
        apply_move(work, move, log);
        ++res.accepted_moves;
        res.trajectory.push_back(detail::round_metrics(original, base_shells, work));
    }
    res.final_graph = std::move(work);
    res.edit_log = std::move(log);
    return res;
}

/// Heuristic rewiring attack: the first edge comes from the top shell-weight
/// quantile, the second from the bottom quantile, with shells recomputed every
/// round. Feasible moves are applied unconditionally, as in the random attack.
inline AttackResult attack_heuristic(const Graph& original, const AttackConfig& cfg_in) {
    AttackConfig cfg = cfg_in;
    cfg.strategy = Strategy::ha;
    cfg.validate();
    if (original.edge_count() < 2) {
        throw DomainError("heuristic attack needs at least two edges");
    }

    const ShellIndex base_shells = kshell_decompose(original);
    std::mt19937_64 rng(cfg.seed);

    Graph work = original;
    EditLog log;
    AttackResult res;
    res.config = cfg;
    for (std::size_t round = 1; round <= cfg.rounds; ++round) {
        const ShellIndex current = kshell_decompose(work);
        const HeuristicPools pools = heuristic_pools(work, current, cfg.ha_quantile);
        std::uniform_int_distribution<std::size_t> from_top(0, pools.top.size() - 1);
        std::uniform_int_distribution<std::size_t> from_bottom(0, pools.bottom.size() - 1);
        const RewiringMove move = detail::draw_feasible(
            work, cfg, round, log, res.trajectory, res.accepted_moves, res.proposed_moves,
            [&]() -> std::optional<RewiringMove> {
                const Edge e1 = work.edge_at(pools.top[from_top(rng)]);
                const Edge e2 = work.edge_at(pools.bottom[from_bottom(rng)]);
                if (e1 == e2) return std::nullopt;
                const auto tag = judge_constraints(work, e1, e2, cfg.both_cases, &rng);
                if (!tag) return std::nullopt;
                return make_move(e1, e2, *tag);
            });
        ++res.proposed_moves;
        apply_move(work, move, log);
        ++res.accepted_moves;
        res.trajectory.push_back(detail::round_metrics(original, base_shells, work));
    }
    res.final_graph = std::move(work);
    res.edit_log = std::move(log);
    return res;
}

/// Annealing-based attack. Each attacking round runs an annealing loop over
/// candidate rewirings of the round's starting graph; the temperature divides
/// by the step counter (T_tau = T / tau!), an improving candidate is always
/// kept, and a worse one survives with probability exp(-|delta ASR| / T_tau).
/// ASR is always measured against the original graph's shells. The loop stops
/// once the temperature falls to the terminate threshold, and the last kept
/// candidate becomes the next round's graph.
inline AttackResult attack_sa(const Graph& original, const AttackConfig& cfg_in) {
    AttackConfig cfg = cfg_in;
    cfg.strategy = Strategy::sa;
    cfg.validate();
    if (original.edge_count() < 2) {
        throw DomainError("annealing attack needs at least two edges");
    }

    const ShellIndex base_shells = kshell_decompose(original);
    const double n_nodes = double(original.node_count());
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Graph work = original;
    EditLog log;
    AttackResult res;
    res.config = cfg;
    for (std::size_t round = 1; round <= cfg.rounds; ++round) {
        double asr_threshold =
            double(count_shell_changes(base_shells, kshell_decompose(work))) / n_nodes;
        std::optional<RewiringMove> kept;  // pending move defining this round's output
        std::size_t tau = 0;
        double tau_factorial = 1.0;
        double temperature = cfg.initial_temp;
        while (temperature > cfg.terminate_temp) {
            const RewiringMove move = detail::draw_feasible(
                work, cfg, round, log, res.trajectory, res.accepted_moves, res.proposed_moves,
                [&] { return random_feasible_move(work, rng, cfg.both_cases); });
            ++tau;
            ++res.proposed_moves;
            tau_factorial *= double(tau);
            temperature = cfg.initial_temp / tau_factorial;

            apply_move(work, move);  // candidate graph, one rewiring from the base
            const double asr_candidate =
                double(count_shell_changes(base_shells, kshell_decompose(work))) / n_nodes;

            bool accept = asr_candidate > asr_threshold;
            double probability = 1.0;
            if (!accept) {
                probability = acceptance_probability(asr_candidate, asr_threshold, temperature);
                accept = unit(rng) < probability;
            }
            if (cfg.annealing_observer) {
                cfg.annealing_observer(AnnealingObservation{round, tau, temperature,
                                                            asr_candidate, asr_threshold,
                                                            probability, accept});
            }

            if (cfg.compound_moves) {
                if (accept) {
                    log.record(move);
                    ++res.accepted_moves;
                    asr_threshold = asr_candidate;
                } else {
                    apply_move(work, inverse(move));
                }
            } else {
                apply_move(work, inverse(move));  // proposals always restart from the base
                if (accept) {
                    kept = move;
                    ++res.accepted_moves;
                    asr_threshold = asr_candidate;
                }
            }
        }
        if (kept) apply_move(work, *kept, log);
        res.trajectory.push_back(detail::round_metrics(original, base_shells, work));
    }
    res.final_graph = std::move(work);
    res.edit_log = std::move(log);
    return res;
}

inline AttackResult run_attack(const Graph& original, const AttackConfig& cfg) {
    switch (cfg.strategy) {
        case Strategy::ra: return attack_random(original, cfg);
        case Strategy::ha: return attack_heuristic(original, cfg);
        case Strategy::sa: return attack_sa(original, cfg);
    }
    throw DomainError("unknown attack strategy");
}

}  // namespace kshell

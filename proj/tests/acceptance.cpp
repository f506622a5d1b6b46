// Acceptance gate: one line per criterion, exit code = number of failures.
// argv[1] points at the dataset directory (defaults to the bundled data/).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kshell/attack.hpp"
#include "kshell/decomposition.hpp"
#include "kshell/graph.hpp"
#include "kshell/harness.hpp"
#include "kshell/metrics.hpp"
#include "support/oracles.hpp"

using namespace kshell;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string num(double v, int prec = 3) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
    return buf;
}

bool report(int id, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    return ok;
}

// Collects the metric identity LPN * ASR * |V| == LCR * |E| (equivalently
// LPN * changed_nodes == changed_links) over every record the criteria emit.
struct IdentityAudit {
    double max_err = 0.0;
    std::size_t checked = 0;
    std::size_t undefined_bad = 0;  // undefined LPN despite changed nodes

    void feed(const MetricReport& r, std::size_t n_nodes, std::size_t n_edges) {
        if (r.lpn) {
            const double lhs = *r.lpn * r.asr * double(n_nodes);
            const double rhs = r.lcr * double(n_edges);
            max_err = std::max(max_err, std::abs(lhs - rhs));
            max_err = std::max(
                max_err, std::abs(*r.lpn * double(r.changed_nodes) - double(r.changed_links)));
            ++checked;
        } else if (r.changed_nodes != 0) {
            ++undefined_bad;
        }
    }
};

IdentityAudit audit;

Graph load(const std::string& name, const std::filesystem::path& data_dir) {
    return load_dataset(find_dataset(name, data_dir));
}

bool criterion1(const std::filesystem::path& data_dir) {
    Timer timer;
    std::size_t graphs = 0, mismatches = 0;
    for (int n : {20, 40, 60}) {
        for (double p : {0.05, 0.1, 0.2}) {
            for (std::uint64_t seed = 1; seed <= 12; ++seed) {
                const Graph g = testing::er_gnp(n, p, seed);
                if (!(kshell_decompose(g) == testing::kshell_oracle(g))) ++mismatches;
                ++graphs;
            }
        }
    }
    std::size_t datasets = 0;
    for (const DatasetSpec& spec : builtin_datasets(data_dir)) {
        const Graph g = load_dataset(spec);
        if (!(kshell_decompose(g) == testing::kshell_oracle(g))) ++mismatches;
        ++datasets;
    }
    const double t = timer.secs();
    return report(1, mismatches == 0 && t < 10.0,
                  "bucket peel matches the naive oracle on " + std::to_string(graphs) +
                      " random graphs and " + std::to_string(datasets) + " datasets, " +
                      std::to_string(mismatches) + " mismatches (" + num(t, 2) + "s, limit 10s)");
}

bool criterion2(const std::filesystem::path& data_dir) {
    std::string msg;
    bool ok = true;
    for (const DatasetSpec& spec : builtin_datasets(data_dir)) {
        try {
            const Graph g = load_dataset(spec);  // throws on any profile mismatch
            const ShellIndex idx = kshell_decompose(g);
            msg += spec.name + " " + std::to_string(g.node_count()) + "/" +
                      std::to_string(g.edge_count()) + "/" + std::to_string(idx.max_shell()) +
                      " ";
            if (spec.name == "facebook") {
                const ShellHistogram hist = shell_histogram(idx, g.node_count());
                const double f11 = hist.fraction(11);
                const double f1 = hist.fraction(1);
                msg += "(shell-11 frac " + num(f11) + ", shell-1 frac " + num(f1) + ") ";
                if (std::abs(f11 - 0.18) > 0.02 || std::abs(f1 - 0.19) > 0.02) ok = false;
            }
        } catch (const std::exception& e) {
            msg += spec.name + " FAILED: " + e.what() + " ";
            ok = false;
        }
    }
    msg.pop_back();
    return report(2, ok, msg);
}

bool criterion3(const std::filesystem::path& data_dir) {
    std::size_t runs = 0, violations = 0;
    for (const std::string name : {"karate", "dolphin"}) {
        const Graph g = load(name, data_dir);
        for (Strategy method : {Strategy::ra, Strategy::ha, Strategy::sa}) {
            for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                AttackConfig cfg;
                cfg.strategy = method;
                cfg.rounds = 12;
                cfg.seed = seed;
                ++runs;
                try {
                    const AttackResult res = run_attack(g, cfg);
                    bool same = res.final_graph.node_count() == g.node_count() &&
                                res.final_graph.edge_count() == g.edge_count() &&
                                res.final_graph.degree_sequence() == g.degree_sequence();
                    for (NodeId v = 0; same && v < g.node_count(); ++v) {
                        same = res.final_graph.degree(v) == g.degree(v);
                    }
                    if (!same) ++violations;
                } catch (const std::exception&) {
                    ++violations;
                }
            }
        }
    }
    return report(3, violations == 0,
                  "per-node degrees and link counts preserved in " +
                      std::to_string(runs - violations) + "/" + std::to_string(runs) +
                      " runs (2 networks x 3 methods x 10 seeds, 12 rounds)");
}

bool criterion4(const Graph& dolphin) {
    Timer timer;
    std::vector<double> asr_at_half;
    std::size_t crossed = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        AttackConfig cfg;
        cfg.strategy = Strategy::ra;
        cfg.rounds = 200;
        cfg.seed = seed;
        const AttackResult res = attack_random(dolphin, cfg);
        bool found = false;
        for (const MetricReport& r : res.trajectory) {
            audit.feed(r, dolphin.node_count(), dolphin.edge_count());
            if (!found && r.lcr >= 0.5) {
                asr_at_half.push_back(r.asr);
                found = true;
            }
        }
        if (found) ++crossed;
        else asr_at_half.push_back(res.trajectory.back().asr);
    }
    const double median = detail::median_of(asr_at_half);
    const double t = timer.secs();
    return report(4, median < 0.15 && crossed == 10 && t < 120.0,
                  "random rewiring on dolphin: median ASR " + num(median) +
                      " at the first point with LCR >= 0.5 (limit 0.15), " +
                      std::to_string(crossed) + "/10 runs crossed (" + num(t, 2) +
                      "s, limit 120s)");
}

bool criterion5(const Graph& dolphin) {
    Timer timer;
    std::vector<double> in_band;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        AttackConfig cfg;
        cfg.strategy = Strategy::sa;
        cfg.rounds = 8;
        cfg.terminate_temp = 1e-9;
        cfg.seed = seed;
        const AttackResult res = attack_sa(dolphin, cfg);
        for (const MetricReport& r : res.trajectory) {
            audit.feed(r, dolphin.node_count(), dolphin.edge_count());
        }
        const MetricReport& last = res.trajectory.back();
        if (last.lcr >= 0.08 && last.lcr <= 0.12) in_band.push_back(last.asr);
    }
    const double median = in_band.empty() ? 0.0 : detail::median_of(in_band);
    const double t = timer.secs();
    return report(5, !in_band.empty() && median >= 0.35 && t < 600.0,
                  "annealing on dolphin: median ASR " + num(median) + " over " +
                      std::to_string(in_band.size()) +
                      "/10 runs with realized LCR in [0.08, 0.12] (floor 0.35; " + num(t, 2) +
                      "s, limit 600s)");
}

std::size_t strategy_slot(Strategy s) {
    return s == Strategy::ra ? 0 : s == Strategy::ha ? 1 : 2;
}

bool criterion6(const std::filesystem::path& data_dir,
                std::map<std::string, std::vector<SweepRecord>>& sweeps) {
    Timer timer;
    std::string msg = "ASR/LPN strategy orderings per realized-LCR bin:";
    bool ok = true;
    for (const std::string name : {"karate", "dolphin", "thrones"}) {
        const Graph g = load(name, data_dir);
        SweepSpec spec;
        spec.dataset = find_dataset(name, data_dir);
        spec.strategies = {Strategy::ra, Strategy::ha, Strategy::sa};
        spec.round_schedule = {4, 8, 12, 16, 20, 28, 36};
        spec.seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        spec.ha_quantile = 0.07;
        const std::vector<SweepRecord> records = run_sweep(g, spec);
        sweeps[name] = records;

        struct BinStats {
            std::vector<double> asr[3];
            std::vector<double> lpn[3];
        };
        std::map<int, BinStats> bins;
        std::size_t not_ok = 0;
        for (const SweepRecord& rec : records) {
            if (!rec.ok()) {
                ++not_ok;
                continue;
            }
            audit.feed(rec.metrics, g.node_count(), g.edge_count());
            BinStats& bin = bins[int(rec.metrics.lcr / 0.05)];
            const std::size_t slot = strategy_slot(rec.method);
            bin.asr[slot].push_back(rec.metrics.asr);
            if (rec.metrics.lpn) bin.lpn[slot].push_back(*rec.metrics.lpn);
        }

        std::size_t shared_bins = 0, violations = 0;
        for (const auto& [index, bin] : bins) {
            if (bin.asr[0].empty() || bin.asr[1].empty() || bin.asr[2].empty()) continue;
            ++shared_bins;
            double asr[3], lpn[3];
            for (std::size_t s = 0; s < 3; ++s) {
                asr[s] = detail::median_of(bin.asr[s]);
                lpn[s] = bin.lpn[s].empty() ? std::numeric_limits<double>::infinity()
                                            : detail::median_of(bin.lpn[s]);
            }
            const bool asr_chain = asr[2] >= asr[1] && asr[1] >= asr[0];
            const bool lpn_chain = lpn[2] <= lpn[1] && lpn[1] <= lpn[0];
            if (!(asr_chain && lpn_chain)) ++violations;
        }
        msg += " " + name + " " + std::to_string(violations) + "/" +
                  std::to_string(shared_bins) + " bins violated";
        if (violations > 1 || not_ok > 0) ok = false;
        if (not_ok > 0) msg += " (" + std::to_string(not_ok) + " runs failed!)";
        msg += ";";
    }
    msg.pop_back();
    return report(6, ok, msg + " (limit 1 per network; " + num(timer.secs(), 1) + "s)");
}

bool criterion7(const std::map<std::string, std::vector<SweepRecord>>& sweeps) {
    std::string msg = "annealing efficiency, median LPN at LCR <= 0.2:";
    bool ok = true;
    for (const auto& [name, records] : sweeps) {
        std::vector<double> lpn;
        for (const SweepRecord& rec : records) {
            if (rec.ok() && rec.method == Strategy::sa && rec.metrics.lcr <= 0.2 &&
                rec.metrics.lpn) {
                lpn.push_back(*rec.metrics.lpn);
            }
        }
        if (lpn.empty()) {
            ok = false;
            msg += " " + name + " no samples;";
            continue;
        }
        const double median = detail::median_of(lpn);
        if (!(median < 1.5)) ok = false;
        msg += " " + name + " " + num(median) + " (" + std::to_string(lpn.size()) + " runs);";
    }
    msg.pop_back();
    return report(7, ok, msg + " (ceiling 1.5)");
}

bool criterion8() {
    Timer timer;
    std::size_t instances = 0, reached = 0, stuck = 0;
    for (std::uint64_t seed = 1; seed <= 24; ++seed) {
        const int n = 6 + int(seed % 4);
        const int m = 9 + int(seed % 4);
        const Graph g = testing::er_gnm(n, m, seed);
        const double best = testing::best_single_rewiring_asr(g);
        ++instances;

        AttackConfig cfg;
        cfg.strategy = Strategy::sa;
        cfg.rounds = 1;
        cfg.terminate_temp = 1e-18;  // ~20 candidate rewirings in the round
        cfg.seed = 1000 + seed;
        cfg.both_cases = BothCasesPolicy::random_case;  // same move space as the oracle
        try {
            const AttackResult res = attack_sa(g, cfg);
            if (res.trajectory.back().asr >= 0.8 * best - 1e-12) ++reached;
        } catch (const StuckRoundError&) {
            ++stuck;
        }
    }
    const double t = timer.secs();
    const bool ok = instances >= 20 && reached * 5 >= instances * 4 && t < 60.0;
    std::string msg = "single-round annealing reaches 80% of the exhaustive best ASR on " +
                         std::to_string(reached) + "/" + std::to_string(instances) +
                         " small graphs (need 80%";
    if (stuck > 0) msg += "; " + std::to_string(stuck) + " stuck";
    return report(8, ok, msg + "; " + num(t, 2) + "s, limit 60s)");
}

bool criterion9() {
    bool ok = true;
    std::string msg;

    double factorial = 1.0;
    for (std::size_t tau = 1; tau <= 12; ++tau) {
        factorial *= double(tau);
        if (annealing_temperature(1.0, tau) != 1.0 / factorial ||
            annealing_temperature(2.5, tau) != 2.5 / factorial) {
            ok = false;
        }
    }
    msg += std::string("cooling T/tau! exact for tau <= 12: ") + (ok ? "yes" : "NO");

    const double p = acceptance_probability(0.10, 0.15, 0.5);
    const double p_err = std::abs(p - std::exp(-0.1));
    if (p_err > 1e-12) ok = false;
    msg += "; p(dASR -0.05, T 0.5) = exp(-0.1) +- " + num(p_err, 15);

    if (audit.undefined_bad > 0) ok = false;
    if (audit.max_err > 1e-12) ok = false;
    msg += "; identity LPN*ASR*V == LCR*E max error " + num(audit.max_err, 15) + " over " +
              std::to_string(audit.checked) + " records";
    return report(9, ok, msg);
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path data_dir = argc > 1 ? argv[1] : default_data_dir();
    int failures = 0;
    try {
        failures += !criterion1(data_dir);
        failures += !criterion2(data_dir);
        failures += !criterion3(data_dir);
        const Graph dolphin = load("dolphin", data_dir);
        failures += !criterion4(dolphin);
        failures += !criterion5(dolphin);
        std::map<std::string, std::vector<SweepRecord>> sweeps;
        failures += !criterion6(data_dir, sweeps);
        failures += !criterion7(sweeps);
        failures += !criterion8();
        failures += !criterion9();
    } catch (const std::exception& e) {
        std::printf("[FAIL] acceptance aborted: %s\n", e.what());
        return 99;
    }
    std::printf("%s\n", failures == 0 ? "all criteria passed" : "criteria failed");
    return failures;
}

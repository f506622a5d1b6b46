// kshell-attack: decompose graphs, evaluate adversarial copies, run single
// rewiring attacks, and drive full experiment sweeps.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kshell/attack.hpp"
#include "kshell/harness.hpp"

namespace fs = std::filesystem;
using namespace kshell;

namespace {

Graph load_edges(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open edge list " + file.string());
    return Graph::parse_edge_list(in);
}

std::string metrics_csv(const MetricReport& r) {
    std::ostringstream out;
    out << detail::fmt_g(r.asr) << ',' << detail::fmt_g(r.lcr) << ','
        << (r.lpn ? detail::fmt_g(*r.lpn) : "nan") << ',' << r.changed_nodes << ','
        << r.changed_links;
    return out.str();
}

void write_text(const fs::path& file, const std::string& content) {
    std::ofstream out(file);
    if (!out) throw Error("cannot write " + file.string());
    out << content;
}

int run_decompose(const fs::path& file) {
    Graph g = load_edges(file);
    const ShellIndex idx = kshell_decompose(g);
    std::cout << "node_label,shell\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::cout << g.label(v) << ',' << idx.shell[v] << '\n';
    }
    const ShellHistogram hist = shell_histogram(idx, g.node_count());
    std::cout << "# nodes: " << g.node_count() << ", links: " << g.edge_count()
              << ", max shell: " << idx.max_shell() << '\n';
    for (const auto& [k, count] : hist.counts) {
        std::cout << "# shell " << k << ": " << count << " nodes (fraction "
                  << detail::fmt_g(hist.fraction(k)) << ")\n";
    }
    return 0;
}

int run_evaluate(const fs::path& original_file, const fs::path& adversarial_file) {
    Graph original = load_edges(original_file);
    Graph adversarial = load_edges(adversarial_file);
    // Align the adversarial graph to the original's node ids through its
    // labels, so the two files may intern nodes in different orders.
    Graph aligned = original;
    for (const Edge& e : original.edges()) aligned.remove_edge(e);
    for (const Edge& e : adversarial.edges()) {
        const auto u = original.find_label(adversarial.label(e.a));
        const auto v = original.find_label(adversarial.label(e.b));
        if (!u || !v) {
            throw DomainError("adversarial graph mentions node '" +
                              (u ? adversarial.label(e.b) : adversarial.label(e.a)) +
                              "' which the original lacks");
        }
        aligned.add_edge(*u, *v);
    }
    const MetricReport r = evaluate_attack(original, kshell_decompose(original), aligned);
    std::cout << metrics_csv(r) << '\n';
    return 0;
}

struct AttackCli {
    std::string method = "sa";
    std::size_t rounds = 1;
    double temp = 1.0;
    double temp_min = 1e-6;
    std::uint64_t seed = 0;
    double ha_quantile = 0.2;
    std::string both_cases = "prefer-1";
    std::size_t retry_budget = 1000;
    bool compound = false;
};

void write_attack_outputs(const fs::path& out_dir, const Graph& original,
                          const AttackResult& result) {
    fs::create_directories(out_dir);
    {
        std::ofstream out(out_dir / "adversarial.edges");
        if (!out) throw Error("cannot write " + (out_dir / "adversarial.edges").string());
        result.final_graph.write_edge_list(out, /*use_labels=*/true);
    }
    write_text(out_dir / "editlog.json",
               editlog_to_json(original, result.edit_log).dump(2) + "\n");
    std::ostringstream traj;
    traj << "round,lcr,asr,lpn,changed_nodes,changed_links\n";
    for (std::size_t i = 0; i < result.trajectory.size(); ++i) {
        const MetricReport& r = result.trajectory[i];
        traj << i + 1 << ',' << detail::fmt_g(r.lcr) << ',' << detail::fmt_g(r.asr) << ','
             << (r.lpn ? detail::fmt_g(*r.lpn) : "nan") << ',' << r.changed_nodes << ','
             << r.changed_links << '\n';
    }
    write_text(out_dir / "trajectory.csv", traj.str());
}

int run_attack_cmd(const fs::path& file, const AttackCli& cli, const fs::path& out_dir) {
    Graph original = load_edges(file);
    AttackConfig cfg;
    cfg.strategy = parse_strategy(cli.method);
    cfg.rounds = cli.rounds;
    cfg.initial_temp = cli.temp;
    cfg.terminate_temp = cli.temp_min;
    cfg.seed = cli.seed;
    cfg.ha_quantile = cli.ha_quantile;
    cfg.both_cases = parse_both_cases_policy(cli.both_cases);
    cfg.retry_budget = cli.retry_budget;
    cfg.compound_moves = cli.compound;

    try {
        const AttackResult result = run_attack(original, cfg);
        write_attack_outputs(out_dir, original, result);
        std::cout << metrics_csv(result_metrics(original, result)) << '\n';
        return 0;
    } catch (const StuckRoundError& e) {
        write_attack_outputs(out_dir, original, e.partial());
        std::cout << metrics_csv(result_metrics(original, e.partial())) << '\n';
        std::cerr << "warning: " << e.what() << "; wrote the partial result\n";
        return 2;
    }
}

int run_sweep_cmd(const fs::path& config_file, const fs::path& out_dir,
                  const fs::path& data_dir) {
    const SweepSpec spec = load_sweep_config(config_file, data_dir);
    const Graph original = load_dataset(spec.dataset);
    fs::create_directories(out_dir);

    std::ofstream records(out_dir / "records.csv");
    if (!records) throw Error("cannot write " + (out_dir / "records.csv").string());
    records << records_csv_header() << '\n';
    records.flush();

    const auto all = run_sweep(original, spec, [&](const SweepRecord& rec,
                                                   const AttackResult* result) {
        const std::string line = to_csv_line(rec);
        records << line << '\n';
        records.flush();  // single serialization point, one record per line
        std::cout << line << '\n';
        if (result) {
            write_text(out_dir / ("editlog-" + rec.cell_id() + ".json"),
                       editlog_to_json(original, result->edit_log).dump(2) + "\n");
            write_text(out_dir / ("case-study-" + rec.cell_id() + ".json"),
                       emit_case_study(original, *result).dump(2) + "\n");
        }
    });

    std::ostringstream medians;
    medians << medians_csv_header() << '\n';
    for (const MedianRecord& m : median_records(all)) {
        medians << to_csv_line(m) << '\n';
    }
    write_text(out_dir / "medians.csv", medians.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-shell structure robustness under degree-preserving link rewiring"};
    app.require_subcommand(1);

    std::string decompose_file;
    CLI::App* decompose =
        app.add_subcommand("decompose", "print node_label,shell CSV plus a histogram summary");
    decompose->add_option("edgelist", decompose_file, "edge list file")->required();

    std::string eval_original, eval_adversarial;
    CLI::App* evaluate =
        app.add_subcommand("evaluate", "print asr,lcr,lpn,changed_nodes,changed_links");
    evaluate->add_option("original", eval_original, "original edge list")->required();
    evaluate->add_option("adversarial", eval_adversarial, "adversarial edge list")->required();

    std::string attack_file, attack_out;
    AttackCli cli;
    CLI::App* attack = app.add_subcommand(
        "attack", "run one attack; write adversarial.edges, editlog.json, trajectory.csv");
    attack->add_option("edgelist", attack_file, "edge list file")->required();
    attack->add_option("--method", cli.method, "ra, ha, or sa")->required();
    attack->add_option("--rounds", cli.rounds, "attacking rounds N");
    attack->add_option("--temp", cli.temp, "initial annealing temperature");
    attack->add_option("--temp-min", cli.temp_min, "terminate temperature");
    attack->add_option("--seed", cli.seed, "random seed");
    attack->add_option("--ha-quantile", cli.ha_quantile, "heuristic pool quantile");
    attack->add_option("--both-cases", cli.both_cases,
                       "prefer-1, prefer-2, random, or reject");
    attack->add_option("--retry-budget", cli.retry_budget,
                       "consecutive infeasible draws before a round counts as stuck");
    attack->add_flag("--compound", cli.compound,
                     "let one annealing round bank several rewirings");
    attack->add_option("--out", attack_out, "output directory")->required();

    std::string sweep_config, sweep_out, sweep_data;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "run a sweep config; write records.csv, medians.csv, per-run json");
    sweep->add_option("--config", sweep_config, "sweep config json")->required();
    sweep->add_option("--out", sweep_out, "output directory")->required();
    sweep->add_option("--data-dir", sweep_data,
                      "dataset directory (default: KSHELL_DATA_DIR or ./data)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (decompose->parsed()) return run_decompose(decompose_file);
        if (evaluate->parsed()) return run_evaluate(eval_original, eval_adversarial);
        if (attack->parsed()) return run_attack_cmd(attack_file, cli, attack_out);
        if (sweep->parsed()) {
            const fs::path data = sweep_data.empty() ? default_data_dir() : fs::path(sweep_data);
            return run_sweep_cmd(sweep_config, sweep_out, data);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

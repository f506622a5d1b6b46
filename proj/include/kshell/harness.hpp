#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kshell/attack.hpp"
#include "kshell/decomposition.hpp"
#include "kshell/errors.hpp"
#include "kshell/graph.hpp"
#include "kshell/metrics.hpp"
#include "kshell/rewiring.hpp"

namespace kshell {

struct DatasetSpec {
    std::string name;
    std::filesystem::path path;
    std::size_t expected_nodes = 0;
    std::size_t expected_edges = 0;
    int expected_max_shell = 0;
};

/// Dataset directory: KSHELL_DATA_DIR when set, else ./data.
inline std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("KSHELL_DATA_DIR"); env && *env) {
        return std::filesystem::path(env);
    }
    return std::filesystem::path("data");
}

inline std::vector<DatasetSpec> builtin_datasets(const std::filesystem::path& data_dir) {
    return {
        {"karate", data_dir / "karate.edges", 34, 78, 4},
        {"dolphin", data_dir / "dolphin.edges", 62, 159, 4},
        {"thrones", data_dir / "thrones.edges", 107, 352, 7},
        {"facebook", data_dir / "facebook.edges", 1266, 6451, 11},
    };
}

inline DatasetSpec find_dataset(const std::string& name, const std::filesystem::path& data_dir) {
    for (DatasetSpec& spec : builtin_datasets(data_dir)) {
        if (spec.name == name) return std::move(spec);
    }
    throw DomainError("unknown dataset '" + name +
                      "' (expected karate, dolphin, thrones, or facebook)");
}

/// Parses the edge list at spec.path and validates it against the expected
/// node/edge counts and maximum shell.
inline Graph load_dataset(const DatasetSpec& spec) {
    std::ifstream in(spec.path);
    if (!in) throw Error("cannot open dataset file " + spec.path.string());
    Graph g = Graph::parse_edge_list(in);
    const ShellIndex idx = kshell_decompose(g);
    const int max_shell = idx.max_shell();
    if (g.node_count() != spec.expected_nodes || g.edge_count() != spec.expected_edges ||
        max_shell != spec.expected_max_shell) {
        std::ostringstream msg;
        msg << "dataset '" << spec.name << "' does not match its expected statistics: expected "
            << spec.expected_nodes << " nodes, " << spec.expected_edges << " links, max shell "
            << spec.expected_max_shell << "; found " << g.node_count() << " nodes, "
            << g.edge_count() << " links, max shell " << max_shell;
        throw VersionMismatchError(msg.str());
    }
    return g;
}

struct SweepSpec {
    DatasetSpec dataset;
    std::vector<Strategy> strategies;
    std::vector<std::size_t> round_schedule;  // budget axis; LCR <= 2N/|E| per run
    std::vector<std::uint64_t> seeds;
    double sa_temp = 1.0;
    double sa_temp_min = 1e-6;
    double ha_quantile = 0.2;
    BothCasesPolicy both_cases = BothCasesPolicy::prefer_case_one;

    void validate() const {
        if (strategies.empty()) throw DomainError("sweep needs at least one strategy");
        if (seeds.empty()) throw DomainError("sweep needs at least one seed");
        if (round_schedule.empty()) throw DomainError("sweep needs at least one round count");
        for (std::size_t i = 0; i + 1 < round_schedule.size(); ++i) {
            if (round_schedule[i] >= round_schedule[i + 1]) {
                throw DomainError("round schedule must be strictly increasing");
            }
        }
        for (std::size_t n : round_schedule) {
            if (n < 1) throw DomainError("round counts must be >= 1");
        }
    }

    AttackConfig attack_config(Strategy method, std::size_t rounds, std::uint64_t seed) const {
        AttackConfig cfg;
        cfg.strategy = method;
        cfg.rounds = rounds;
        cfg.initial_temp = sa_temp;
        cfg.terminate_temp = sa_temp_min;
        cfg.seed = seed;
        cfg.both_cases = both_cases;
        cfg.ha_quantile = ha_quantile;
        return cfg;
    }
};

/// One sweep cell outcome. status is "ok" for a completed run, "stuck" when
/// the retry budget ran out (metrics then describe the partial result), and
/// "error: ..." otherwise (metrics then carry NaN).
struct SweepRecord {
    std::string dataset;
    Strategy method = Strategy::ra;
    std::uint64_t seed = 0;
    std::size_t rounds = 0;
    MetricReport metrics;
    double wall_time_s = 0.0;
    std::string status = "ok";

    bool ok() const { return status == "ok"; }
    std::string cell_id() const {
        return dataset + "-" + to_string(method) + "-n" + std::to_string(rounds) + "-s" +
               std::to_string(seed);
    }
};

struct MedianRecord {
    std::string dataset;
    Strategy method = Strategy::ra;
    std::size_t rounds = 0;
    std::size_t runs = 0;  // completed runs the medians are taken over
    double median_lcr = 0.0;
    double median_asr = 0.0;
    std::optional<double> median_lpn;  // median over runs with defined LPN
};

namespace detail {

inline std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string csv_safe(std::string text) {
    for (char& c : text) {
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    }
    return text;
}

inline double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace detail

inline std::string records_csv_header() {
    return "dataset,method,seed,rounds,lcr,asr,lpn,changed_nodes,changed_links,wall_time_s,status";
}

inline std::string to_csv_line(const SweepRecord& r) {
    std::ostringstream out;
    out << r.dataset << ',' << to_string(r.method) << ',' << r.seed << ',' << r.rounds << ','
        << detail::fmt_g(r.metrics.lcr) << ',' << detail::fmt_g(r.metrics.asr) << ','
        << (r.metrics.lpn ? detail::fmt_g(*r.metrics.lpn) : "nan") << ','
        << r.metrics.changed_nodes << ',' << r.metrics.changed_links << ','
        << detail::fmt_g(r.wall_time_s) << ',' << detail::csv_safe(r.status);
    return out.str();
}

inline std::string medians_csv_header() {
    return "dataset,method,rounds,runs,median_lcr,median_asr,median_lpn";
}

inline std::string to_csv_line(const MedianRecord& r) {
    std::ostringstream out;
    out << r.dataset << ',' << to_string(r.method) << ',' << r.rounds << ',' << r.runs << ','
        << detail::fmt_g(r.median_lcr) << ',' << detail::fmt_g(r.median_asr) << ','
        << (r.median_lpn ? detail::fmt_g(*r.median_lpn) : "nan");
    return out.str();
}

/// Metrics of a result's final graph relative to the original. Equals the last
/// trajectory entry when at least one round completed.
inline MetricReport result_metrics(const Graph& original, const AttackResult& result) {
    if (!result.trajectory.empty()) return result.trajectory.back();
    return evaluate_attack(original, kshell_decompose(original), result.final_graph);
}

/// Runs every (strategy, rounds, seed) cell of the sweep in a deterministic
/// order. Failures become error records and the sweep continues. `per_run` is
/// invoked after each cell with the record and, when the run produced a graph
/// (ok or stuck), the attack result.
inline std::vector<SweepRecord> run_sweep(
    const Graph& original, const SweepSpec& spec,
    const std::function<void(const SweepRecord&, const AttackResult*)>& per_run = {}) {
    spec.validate();
    std::vector<SweepRecord> records;
    records.reserve(spec.strategies.size() * spec.round_schedule.size() * spec.seeds.size());
    for (Strategy method : spec.strategies) {
        for (std::size_t rounds : spec.round_schedule) {
            for (std::uint64_t seed : spec.seeds) {
                SweepRecord rec;
                rec.dataset = spec.dataset.name;
                rec.method = method;
                rec.seed = seed;
                rec.rounds = rounds;
                std::optional<AttackResult> result;
                const auto started = std::chrono::steady_clock::now();
                try {
                    result = run_attack(original, spec.attack_config(method, rounds, seed));
                } catch (const StuckRoundError& e) {
                    result = e.partial();
                    rec.status = "stuck";
                } catch (const std::exception& e) {
                    rec.status = std::string("error: ") + e.what();
                    const double nan = std::numeric_limits<double>::quiet_NaN();
                    rec.metrics.asr = nan;
                    rec.metrics.lcr = nan;
                }
                const auto ended = std::chrono::steady_clock::now();
                rec.wall_time_s = std::chrono::duration<double>(ended - started).count();
                if (result) rec.metrics = result_metrics(original, *result);
                records.push_back(rec);
                if (per_run) per_run(rec, result ? &*result : nullptr);
            }
        }
    }
    return records;
}

/// Per-(dataset, method, rounds) medians across seeds, taken over completed
/// runs only. Cell order follows first appearance in `records`, so the output
/// is independent of how runs were scheduled within a cell.
inline std::vector<MedianRecord> median_records(const std::vector<SweepRecord>& records) {
    std::vector<MedianRecord> medians;
    std::map<std::tuple<std::string, Strategy, std::size_t>, std::size_t> index;
    std::vector<std::vector<const SweepRecord*>> groups;
    for (const SweepRecord& rec : records) {
        const auto key = std::make_tuple(rec.dataset, rec.method, rec.rounds);
        auto [it, fresh] = index.emplace(key, groups.size());
        if (fresh) {
            groups.emplace_back();
            MedianRecord m;
            m.dataset = rec.dataset;
            m.method = rec.method;
            m.rounds = rec.rounds;
            medians.push_back(m);
        }
        if (rec.ok()) groups[it->second].push_back(&rec);
    }
    for (std::size_t i = 0; i < groups.size(); ++i) {
        MedianRecord& m = medians[i];
        m.runs = groups[i].size();
        if (m.runs == 0) continue;
        std::vector<double> lcr, asr, lpn;
        for (const SweepRecord* rec : groups[i]) {
            lcr.push_back(rec->metrics.lcr);
            asr.push_back(rec->metrics.asr);
            if (rec->metrics.lpn) lpn.push_back(*rec->metrics.lpn);
        }
        m.median_lcr = detail::median_of(std::move(lcr));
        m.median_asr = detail::median_of(std::move(asr));
        if (!lpn.empty()) m.median_lpn = detail::median_of(std::move(lpn));
    }
    return medians;
}

/// Edit set as JSON: {"removed": [[label_a, label_b], ...], "added": [...]},
/// edges ordered by their endpoints' internal ids.
inline nlohmann::json editlog_to_json(const Graph& g, const EditLog& log) {
    const auto edges_json = [&g](const auto& edge_set) {
        std::vector<Edge> edges(edge_set.begin(), edge_set.end());
        std::sort(edges.begin(), edges.end());
        nlohmann::json arr = nlohmann::json::array();
        for (const Edge& e : edges) {
            arr.push_back({g.label(e.a), g.label(e.b)});
        }
        return arr;
    };
    nlohmann::json doc;
    doc["removed"] = edges_json(log.removed_original());
    doc["added"] = edges_json(log.added_foreign());
    return doc;
}

/// Everything needed to redraw an attacked graph next to its original:
/// per-node shells before/after, per-node deltas, the edit set, and the
/// resulting metrics.
inline nlohmann::json emit_case_study(const Graph& original, const AttackResult& result) {
    const ShellIndex before = kshell_decompose(original);
    const ShellIndex after = kshell_decompose(result.final_graph);
    if (before.size() != after.size()) {
        throw DomainError("attack result does not belong to this graph");
    }
    nlohmann::json original_shells, adversarial_shells, deltas;
    for (NodeId v = 0; v < original.node_count(); ++v) {
        const std::string& label = original.label(v);
        original_shells[label] = before.shell[v];
        adversarial_shells[label] = after.shell[v];
        deltas[label] = after.shell[v] - before.shell[v];
    }
    const MetricReport metrics = result_metrics(original, result);
    nlohmann::json doc;
    doc["original_shells"] = std::move(original_shells);
    doc["adversarial_shells"] = std::move(adversarial_shells);
    doc["shell_deltas"] = std::move(deltas);
    doc["edits"] = editlog_to_json(original, result.edit_log);
    doc["metrics"] = {
        {"asr", metrics.asr},
        {"lcr", metrics.lcr},
        {"lpn", metrics.lpn ? nlohmann::json(*metrics.lpn) : nlohmann::json()},
        {"changed_nodes", metrics.changed_nodes},
        {"changed_links", metrics.changed_links},
    };
    return doc;
}

/// Reads a sweep description: {"dataset": name-or-object, "strategies": [...],
/// "round_schedule": [...], "seeds": [...]} plus optional "sa_params"
/// {"temp", "temp_min"}, "ha_quantile", and "both_cases". A dataset object
/// carries {"name", "path", "nodes", "edges", "max_shell"}.
inline SweepSpec parse_sweep_config(const nlohmann::json& doc,
                                    const std::filesystem::path& data_dir) {
    if (!doc.is_object()) throw DomainError("sweep config must be a JSON object");
    SweepSpec spec;
    try {
        const nlohmann::json& ds = doc.at("dataset");
        if (ds.is_string()) {
            spec.dataset = find_dataset(ds.get<std::string>(), data_dir);
        } else {
            spec.dataset.name = ds.at("name").get<std::string>();
            spec.dataset.path = std::filesystem::path(ds.at("path").get<std::string>());
            if (spec.dataset.path.is_relative()) spec.dataset.path = data_dir / spec.dataset.path;
            spec.dataset.expected_nodes = ds.at("nodes").get<std::size_t>();
            spec.dataset.expected_edges = ds.at("edges").get<std::size_t>();
            spec.dataset.expected_max_shell = ds.at("max_shell").get<int>();
        }
        for (const auto& s : doc.at("strategies")) {
            spec.strategies.push_back(parse_strategy(s.get<std::string>()));
        }
        spec.round_schedule = doc.at("round_schedule").get<std::vector<std::size_t>>();
        spec.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
        if (doc.contains("sa_params")) {
            const nlohmann::json& sa = doc.at("sa_params");
            if (sa.contains("temp")) spec.sa_temp = sa.at("temp").get<double>();
            if (sa.contains("temp_min")) spec.sa_temp_min = sa.at("temp_min").get<double>();
        }
        if (doc.contains("ha_quantile")) spec.ha_quantile = doc.at("ha_quantile").get<double>();
        if (doc.contains("both_cases")) {
            spec.both_cases = parse_both_cases_policy(doc.at("both_cases").get<std::string>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("invalid sweep config: ") + e.what());
    }
    spec.validate();
    return spec;
}

inline SweepSpec load_sweep_config(const std::filesystem::path& file,
                                   const std::filesystem::path& data_dir) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open sweep config " + file.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("sweep config is not valid JSON: ") + e.what(), 0);
    }
    return parse_sweep_config(doc, data_dir);
}

}  // namespace kshell

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sbundle/connectivity.hpp"
#include "sbundle/io.hpp"
#include "sbundle/search.hpp"

namespace {

enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("SBUNDLE_LOG");
        if (!env) return LogLevel::error;
        std::string value(env);
        if (value == "debug") return LogLevel::debug;
        if (value == "info") return LogLevel::info;
        return LogLevel::error;
    }();
    return level;
}

void log_info(const std::string& message) {
    if (log_level() >= LogLevel::info) std::cerr << "[info] " << message << '\n';
}

void log_debug(const std::string& message) {
    if (log_level() >= LogLevel::debug) std::cerr << "[debug] " << message << '\n';
}

std::string instance_name(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::string round_sig3(double value) {
    std::ostringstream out;
    out.precision(3);
    out << value;
    return out.str();
}

struct SolveFlags {
    std::string graph_path;
    int s = 0;
    double time_limit = 3600.0;
    std::string lb = "randwalk";
    std::string bound = "pub";
    bool no_preprocess = false;
    bool no_expand = false;
    std::string json_path;
    bool quiet = false;
};

sbundle::SolverConfig to_config(const SolveFlags& flags) {
    sbundle::SolverConfig config;
    config.s = flags.s;
    config.time_limit_s = flags.time_limit;
    config.lb_mode = flags.lb == "randwalk" ? sbundle::LbMode::randwalk
                   : flags.lb == "greedy"   ? sbundle::LbMode::greedy
                                            : sbundle::LbMode::none;
    config.bound.kind =
        flags.bound == "color" ? sbundle::BoundKind::color : sbundle::BoundKind::partition;
    config.bound.expand = !flags.no_expand;
    config.preprocess = !flags.no_preprocess;
    return config;
}

sbundle::ResultRecord to_record(const std::string& instance, const sbundle::ParsedGraph& parsed,
                                const sbundle::SolverConfig& config,
                                const sbundle::SolverResult& result,
                                const std::string& variant) {
    sbundle::ResultRecord record;
    record.instance = instance;
    record.s = config.s;
    record.size = result.best_size;
    for (int v : result.witness)
        record.witness.push_back(parsed.labels[static_cast<std::size_t>(v)]);
    record.reduced_v = result.reduced_vertices;
    record.reduced_e = result.reduced_edges;
    record.tree_nodes = result.tree_nodes;
    record.time_s = result.time_seconds;
    record.timed_out = result.timed_out;
    record.variant = variant;
    return record;
}

int cmd_solve(const SolveFlags& flags) {
    sbundle::ParsedGraph parsed;
    try {
        parsed = sbundle::load_graph_file(flags.graph_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    log_info("parsed " + flags.graph_path + ": " + std::to_string(parsed.graph.num_vertices()) +
             " vertices, " + std::to_string(parsed.graph.num_edges()) + " edges");
    auto config = to_config(flags);
    auto result = sbundle::solve(parsed.graph, config);
    auto record = to_record(instance_name(flags.graph_path), parsed, config, result, "default");
    log_debug("tree nodes: " + std::to_string(result.tree_nodes));

    if (!flags.quiet) {
        std::cout << "instance: " << record.instance << '\n';
        std::cout << "s: " << record.s << '\n';
        std::cout << "size: " << record.size << '\n';
        std::cout << "witness:";
        for (long long label : record.witness) std::cout << ' ' << label;
        std::cout << '\n';
        std::cout << "tree nodes: " << record.tree_nodes << '\n';
        std::cout << "reduced: " << record.reduced_v << " vertices, " << record.reduced_e
                  << " edges\n";
        std::cout << "time: " << record.time_s << " s\n";
        std::cout << "status: " << (record.timed_out ? "timeout" : "optimum") << '\n';
    }
    if (!flags.json_path.empty()) {
        std::ofstream out(flags.json_path);
        if (!out) {
            std::cerr << "error: cannot write '" << flags.json_path << "'\n";
            return 2;
        }
        sbundle::write_results({&record, 1}, sbundle::ResultFormat::json, out);
    }
    return record.timed_out ? 124 : 0;
}

int cmd_verify(const std::string& graph_path, int s, const std::vector<long long>& labels) {
    sbundle::ParsedGraph parsed;
    try {
        parsed = sbundle::load_graph_file(graph_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    std::map<long long, int> id_of;
    for (std::size_t i = 0; i < parsed.labels.size(); ++i)
        id_of[parsed.labels[i]] = static_cast<int>(i);
    sbundle::VertexSet set(parsed.graph.num_vertices());
    for (long long label : labels) {
        auto it = id_of.find(label);
        if (it == id_of.end()) {
            std::cerr << "error: vertex " << label << " not in graph\n";
            return 2;
        }
        set.insert(it->second);
    }
    auto sub = sbundle::induced_subgraph(parsed.graph, set);
    int k = sub.graph.num_vertices();
    if (sbundle::is_s_bundle(sub.graph, s)) {
        std::cout << "FEASIBLE: " << k << " vertices, connectivity requirement "
                  << std::max(k - s, 0) << '\n';
        return 0;
    }
    std::cout << "INFEASIBLE\n";
    for (int v = 0; v < k; ++v)
        if (sub.graph.degree(v) < k - s) {
            std::cout << "vertex " << parsed.labels[static_cast<std::size_t>(sub.orig_ids[static_cast<std::size_t>(v)])]
                      << " has degree " << sub.graph.degree(v) << " < " << k - s << '\n';
            return 1;
        }
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            if (sub.graph.has_edge(u, v)) continue;
            int lc = sbundle::local_connectivity(sub.graph, u, v);
            if (lc < k - s) {
                std::cout << "pair ("
                          << parsed.labels[static_cast<std::size_t>(sub.orig_ids[static_cast<std::size_t>(u)])]
                          << ", "
                          << parsed.labels[static_cast<std::size_t>(sub.orig_ids[static_cast<std::size_t>(v)])]
                          << ") has local connectivity " << lc << " < " << k - s << '\n';
                return 1;
            }
        }
    return 1;
}

struct BenchFlags {
    std::string dir;
    std::vector<int> s_list{2};
    double time_limit = 3600.0;
    std::vector<std::string> variants{"default"};
    int jobs = 1;
    std::string out = "results.csv";
};

sbundle::SolverConfig variant_config(const std::string& variant, int s, double time_limit) {
    SolveFlags flags;
    flags.s = s;
    flags.time_limit = time_limit;
    if (variant == "nopre") flags.no_preprocess = true;
    else if (variant == "greedy") flags.lb = "greedy";
    else if (variant == "color") flags.bound = "color";
    else if (variant == "noexpand") flags.no_expand = true;
    return to_config(flags);
}

int cmd_bench(const BenchFlags& flags) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(flags.dir, ec))
        if (entry.is_regular_file()) files.push_back(entry.path().string());
    if (ec) {
        std::cerr << "error: cannot read directory '" << flags.dir << "': " << ec.message()
                  << '\n';
        return 2;
    }
    std::sort(files.begin(), files.end());

    struct Loaded {
        std::string name;
        sbundle::ParsedGraph parsed;
    };
    std::vector<Loaded> instances;
    std::vector<std::string> failures;
    for (const auto& path : files) {
        try {
            instances.push_back({instance_name(path), sbundle::load_graph_file(path)});
            log_info("parsed " + path);
        } catch (const std::exception& e) {
            failures.push_back(path + ": " + e.what());
        }
    }

    struct Task {
        const Loaded* instance;
        int s;
        std::string variant;
    };
    std::vector<Task> tasks;
    for (const auto& variant : flags.variants)
        for (int s : flags.s_list)
            for (const auto& inst : instances) tasks.push_back({&inst, s, variant});

    std::vector<std::optional<sbundle::ResultRecord>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            auto config = variant_config(task.variant, task.s, flags.time_limit);
            try {
                auto result = sbundle::solve(task.instance->parsed.graph, config);
                slots[i] = to_record(task.instance->name, task.instance->parsed, config, result,
                                     task.variant);
            } catch (const std::exception& e) {
                std::lock_guard lock(failure_mutex);
                failures.push_back(task.instance->name + " (s=" + std::to_string(task.s) +
                                   ", " + task.variant + "): " + e.what());
            }
        }
    };
    int jobs = std::max(flags.jobs, 1);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<sbundle::ResultRecord> records;
    for (auto& slot : slots)
        if (slot) records.push_back(std::move(*slot));

    std::ofstream out(flags.out);
    if (!out) {
        std::cerr << "error: cannot write '" << flags.out << "'\n";
        return 2;
    }
    bool json = flags.out.size() >= 5 && flags.out.ends_with(".json");
    sbundle::write_results(records, json ? sbundle::ResultFormat::json : sbundle::ResultFormat::csv,
                           out);

    for (const auto& variant : flags.variants) {
        if (flags.variants.size() > 1) std::cout << "variant " << variant << ":\n";
        for (int s : flags.s_list) {
            int solved = 0, total = 0;
            double worst = 0.0;
            for (const auto& r : records) {
                if (r.s != s || r.variant != variant) continue;
                ++total;
                if (!r.timed_out) ++solved;
                worst = std::max(worst, r.time_s);
            }
            std::cout << "s=" << s << ": " << solved << " solved";
            if (solved < total) std::cout << " of " << total;
            std::cout << " (max " << round_sig3(worst) << " s)\n";
        }
    }
    std::cout << "wrote " << records.size() << " rows to " << flags.out << '\n';
    for (const auto& failure : failures) std::cerr << "failed: " << failure << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact maximum s-bundle solver"};
    app.require_subcommand(1);

    SolveFlags solve_flags;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance to optimality");
    solve_cmd->add_option("--graph", solve_flags.graph_path, "Graph file")->required();
    solve_cmd->add_option("--s", solve_flags.s, "Relaxation parameter s >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--time-limit", solve_flags.time_limit, "Seconds per solve")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--lb", solve_flags.lb, "Initial lower bound heuristic")
        ->check(CLI::IsMember({"randwalk", "greedy", "none"}));
    solve_cmd->add_option("--bound", solve_flags.bound, "Upper bound used for pruning")
        ->check(CLI::IsMember({"pub", "color"}));
    solve_cmd->add_flag("--no-preprocess", solve_flags.no_preprocess, "Skip graph reduction");
    solve_cmd->add_flag("--no-expand", solve_flags.no_expand,
                        "Grow bound parts by direct insertion");
    solve_cmd->add_option("--json", solve_flags.json_path, "Write the result record as JSON");
    solve_cmd->add_flag("--quiet", solve_flags.quiet, "Suppress stdout report");

    std::string verify_graph;
    int verify_s = 0;
    std::vector<long long> verify_vertices;
    auto* verify_cmd = app.add_subcommand("verify", "Check a claimed s-bundle");
    verify_cmd->add_option("--graph", verify_graph, "Graph file")->required();
    verify_cmd->add_option("--s", verify_s, "Relaxation parameter s >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--vertices", verify_vertices, "Comma-separated vertex labels")
        ->required()
        ->delimiter(',');

    BenchFlags bench_flags;
    auto* bench_cmd = app.add_subcommand("bench", "Sweep a directory of instances");
    bench_cmd->add_option("--dir", bench_flags.dir, "Directory of graph files")->required();
    bench_cmd->add_option("--s-list", bench_flags.s_list, "s values")->delimiter(',');
    bench_cmd->add_option("--time-limit", bench_flags.time_limit, "Seconds per solve")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--variants", bench_flags.variants, "Solver variants")
        ->delimiter(',')
        ->check(CLI::IsMember({"default", "nopre", "greedy", "color", "noexpand"}));
    bench_cmd->add_option("--jobs", bench_flags.jobs, "Concurrent solves")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--out", bench_flags.out, "Results file (.csv or .json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_flags);
        if (verify_cmd->parsed()) return cmd_verify(verify_graph, verify_s, verify_vertices);
        return cmd_bench(bench_flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sbundle/io.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace sbundle;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() /
                 ("sbundle_cli_" + std::to_string(static_cast<long>(getpid())));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    auto out_path = scratch_dir() / ("out_" + std::to_string(counter) + ".txt");
    auto err_path = scratch_dir() / ("err_" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string(SBUNDLE_BIN_PATH) + " " + args + " >" + out_path.string() +
                      " 2>" + err_path.string();
    int rc = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

void write_dimacs(const fs::path& path, const support::Graph& g) {
    std::ofstream out(path);
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u))
            if (v > u) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

fs::path fixture(const std::string& name, const support::Graph& g) {
    auto path = scratch_dir() / name;
    write_dimacs(path, g);
    return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("solve reports the optimum") {
    auto path = fixture("k6.clq", support::complete_graph(6));
    auto run = run_cli("solve --graph " + path.string() + " --s 2");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("size: 6") != std::string::npos);
    CHECK(run.out.find("witness: 1 2 3 4 5 6") != std::string::npos);
    CHECK(run.out.find("status: optimum") != std::string::npos);
}

TEST_CASE("solve honors quiet and json output") {
    auto path = fixture("c5.clq", support::cycle_graph(5));
    auto json_path = scratch_dir() / "c5.json";
    auto run = run_cli("solve --graph " + path.string() + " --s 2 --quiet --json " +
                       json_path.string());
    CHECK(run.exit_code == 0);
    CHECK(run.out.empty());

    std::ifstream in(json_path);
    auto records = read_results_json(in);
    REQUIRE(records.size() == 1);
    CHECK(records[0].instance == "c5");
    CHECK(records[0].s == 2);
    CHECK(records[0].size == 3);
    CHECK(records[0].witness == std::vector<long long>{1, 2, 3});
    CHECK(!records[0].timed_out);
}

TEST_CASE("solve variant flags are accepted") {
    auto path = fixture("c5_variants.clq", support::cycle_graph(5));
    for (std::string extra : {"--lb greedy", "--lb none", "--bound color", "--no-preprocess",
                              "--no-expand"}) {
        auto run = run_cli("solve --graph " + path.string() + " --s 2 --quiet " + extra);
        CHECK(run.exit_code == 0);
    }
}

TEST_CASE("solve exits 124 on timeout") {
    auto path = fixture("hard.clq", support::random_graph(80, 0.5, 5));
    auto run = run_cli("solve --graph " + path.string() + " --s 4 --time-limit 0.01");
    CHECK(run.exit_code == 124);
    CHECK(run.out.find("status: timeout") != std::string::npos);
}

TEST_CASE("solve rejects bad invocations") {
    CHECK(run_cli("solve --graph missing.clq --s 2").exit_code == 2);
    auto path = fixture("c5_bad.clq", support::cycle_graph(5));
    CHECK(run_cli("solve --graph " + path.string() + " --s 0").exit_code == 2);
    CHECK(run_cli("solve --graph " + path.string() + " --s 2 --lb what").exit_code == 2);
    CHECK(run_cli("solve --graph " + path.string() + " --s 2 --time-limit 0").exit_code == 2);
    CHECK(run_cli("solve --s 2").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify judges claimed bundles") {
    auto path = fixture("c5_verify.clq", support::cycle_graph(5));
    auto feasible = run_cli("verify --graph " + path.string() + " --s 2 --vertices 1,2,3");
    CHECK(feasible.exit_code == 0);
    CHECK(feasible.out.find("FEASIBLE: 3 vertices") != std::string::npos);

    auto infeasible = run_cli("verify --graph " + path.string() + " --s 2 --vertices 1,2,3,4,5");
    CHECK(infeasible.exit_code == 1);
    CHECK(infeasible.out.find("INFEASIBLE") != std::string::npos);
    CHECK(infeasible.out.find("degree 2 < 3") != std::string::npos);

    CHECK(run_cli("verify --graph " + path.string() + " --s 2 --vertices 9").exit_code == 2);
}

TEST_CASE("verify reports a connectivity certificate when degrees pass") {
    // Two triangles joined by one edge: degrees are fine at s=2 but the
    // far pair is separated by too few vertices.
    auto g = support::make_graph(
        6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
    auto path = fixture("bridge.clq", g);
    auto run = run_cli("verify --graph " + path.string() + " --s 4 --vertices 1,2,3,4,5,6");
    CHECK(run.exit_code == 1);
    CHECK(run.out.find("local connectivity") != std::string::npos);
}

TEST_CASE("bench sweeps a directory deterministically") {
    auto dir = scratch_dir() / "bench_in";
    fs::create_directories(dir);
    write_dimacs(dir / "c5.clq", support::cycle_graph(5));
    write_dimacs(dir / "k6.clq", support::complete_graph(6));
    {
        std::ofstream bad(dir / "broken.clq");
        bad << "p edge 2 1\ne 1 5\n";
    }

    auto csv_path = scratch_dir() / "results.csv";
    auto run = run_cli("bench --dir " + dir.string() + " --s-list 1,2 --out " +
                       csv_path.string());
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("s=1: 2 solved") != std::string::npos);
    CHECK(run.out.find("s=2: 2 solved") != std::string::npos);
    CHECK(run.out.find("wrote 4 rows to") != std::string::npos);
    CHECK(run.err.find("broken") != std::string::npos);

    std::ifstream in(csv_path);
    auto records = read_results_csv(in);
    REQUIRE(records.size() == 4);
    CHECK(records[0].instance == "c5");
    CHECK(records[0].s == 1);
    CHECK(records[0].size == 2);
    CHECK(records[1].instance == "k6");
    CHECK(records[1].size == 6);
    CHECK(records[2].instance == "c5");
    CHECK(records[2].s == 2);
    CHECK(records[2].size == 3);
    CHECK(records[3].instance == "k6");

    // Concurrency must not change the rows or their order; only the wall
    // times may differ between runs.
    auto csv_jobs = scratch_dir() / "results_jobs.csv";
    auto rerun = run_cli("bench --dir " + dir.string() + " --s-list 1,2 --jobs 3 --out " +
                         csv_jobs.string());
    CHECK(rerun.exit_code == 0);
    std::ifstream in2(csv_jobs);
    auto reread = read_results_csv(in2);
    for (auto* batch : {&records, &reread})
        for (auto& r : *batch) r.time_s = 0.0;
    CHECK(reread == records);
}

TEST_CASE("bench writes json and multi-variant summaries") {
    auto dir = scratch_dir() / "bench_json";
    fs::create_directories(dir);
    write_dimacs(dir / "c5.clq", support::cycle_graph(5));

    auto json_path = scratch_dir() / "results.json";
    auto run = run_cli("bench --dir " + dir.string() + " --s-list 2 --variants default,color" +
                       " --out " + json_path.string());
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("variant default:") != std::string::npos);
    CHECK(run.out.find("variant color:") != std::string::npos);

    std::ifstream in(json_path);
    auto records = read_results_json(in);
    REQUIRE(records.size() == 2);
    CHECK(records[0].variant == "default");
    CHECK(records[1].variant == "color");
    CHECK(records[0].size == records[1].size);
}

TEST_CASE("bench rejects a missing directory") {
    CHECK(run_cli("bench --dir does_not_exist_anywhere").exit_code == 2);
}

TEST_SUITE_END();

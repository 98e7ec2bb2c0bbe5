#include <doctest.h>

#include <stdexcept>

#include "sbundle/oracle.hpp"
#include "sbundle/search.hpp"
#include "support.hpp"

using namespace sbundle;
using support::make_graph;
using support::set_of;

TEST_SUITE_BEGIN("search");

TEST_CASE("make_state computes the degree arrays") {
    auto c5 = support::cycle_graph(5);
    auto st = make_state(c5, set_of(5, {0}), set_of(5, {1, 2, 4}));
    CHECK(st.degree_in_union[0] == 2);
    CHECK(st.degree_in_union[1] == 2);
    CHECK(st.degree_in_union[2] == 1);
    CHECK(st.degree_in_union[4] == 1);
    CHECK(st.neighbors_in_members[1] == 1);
    CHECK(st.neighbors_in_members[2] == 0);
    CHECK(st.neighbors_in_members[0] == 0);

    CHECK_THROWS_AS(make_state(c5, set_of(5, {0}), set_of(5, {0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(make_state(c5, VertexSet(4), VertexSet(5)), std::invalid_argument);
}

TEST_CASE("root_state covers the whole graph") {
    auto st = root_state(support::cycle_graph(5));
    CHECK(st.members.empty());
    CHECK(st.candidates == VertexSet::full(5));
    CHECK(st.degree_in_union == std::vector<int>{2, 2, 2, 2, 2});
}

TEST_CASE("reduce_candidates enforces saturated members") {
    // Members 0 and 1 are non-adjacent, so at s=2 neither tolerates another
    // non-neighbor. Candidate 3 touches only member 1 and must go; candidate
    // 2 touches both and survives.
    auto g = make_graph(4, {{0, 2}, {1, 2}, {1, 3}});
    auto st = make_state(g, set_of(4, {0, 1}), set_of(4, {2, 3}));
    bool dead = reduce_candidates(g, st, 2, 0);
    CHECK(!dead);
    CHECK(st.candidates == set_of(4, {2}));
    CHECK(st.members == set_of(4, {0, 1}));
    CHECK(st.degree_in_union[0] == 1);
    CHECK(st.degree_in_union[2] == 2);
}

TEST_CASE("reduce_candidates reports dead members") {
    auto c5 = support::cycle_graph(5);
    auto st = make_state(c5, set_of(5, {0}), set_of(5, {1, 2, 3, 4}));
    bool dead = reduce_candidates(c5, st, 1, 2);
    CHECK(dead);
    CHECK(st.candidates.empty());
}

TEST_CASE("reduce_candidates input validation") {
    auto c5 = support::cycle_graph(5);
    auto st = root_state(c5);
    CHECK_THROWS_AS(reduce_candidates(c5, st, 0, 1), std::invalid_argument);
}

TEST_CASE("bnb on fixed graphs") {
    CHECK(bnb(support::complete_graph(6), 2, root_state(support::complete_graph(6)), 0) == 6);
    auto c5 = support::cycle_graph(5);
    CHECK(bnb(c5, 3, root_state(c5), 0) == 5);
    CHECK(bnb(c5, 2, root_state(c5), 0) == 3);
    CHECK(bnb(c5, 1, root_state(c5), 0) == 2);
    // The returned value never drops below the supplied incumbent.
    CHECK(bnb(c5, 2, root_state(c5), 4) == 4);
}

TEST_CASE("bnb matches the oracle") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 5 + static_cast<int>(seed % 6);
        double density = 0.25 + 0.15 * static_cast<double>(seed % 4);
        auto g = support::random_graph(n, density, 9900 + seed);
        for (int s = 1; s <= 3; ++s)
            CHECK(bnb(g, s, root_state(g), 0) ==
                  oracle::brute_force_max_s_bundle(g, s).size());
    }
}

TEST_CASE("solve on fixed graphs") {
    SolverConfig config;
    config.s = 2;
    auto result = solve(support::cycle_graph(5), config);
    CHECK(result.best_size == 3);
    CHECK(result.witness == std::vector<int>{0, 1, 2});
    CHECK(!result.timed_out);
    CHECK(result.tree_nodes >= 1);

    auto k6 = solve(support::complete_graph(6), config);
    CHECK(k6.best_size == 6);
    CHECK(k6.witness.size() == 6);

    auto triangles =
        solve(make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}), config);
    CHECK(triangles.best_size == 3);

    auto empty = solve(make_graph(0, {}), config);
    CHECK(empty.best_size == 0);
    CHECK(empty.witness.empty());

    auto edgeless = solve(make_graph(5, {}), config);
    CHECK(edgeless.best_size == 2);
}

TEST_CASE("solve validates its config") {
    auto c5 = support::cycle_graph(5);
    SolverConfig bad_s;
    bad_s.s = 0;
    CHECK_THROWS_AS(solve(c5, bad_s), std::invalid_argument);
    SolverConfig bad_time;
    bad_time.s = 2;
    bad_time.time_limit_s = 0.0;
    CHECK_THROWS_AS(solve(c5, bad_time), std::invalid_argument);
    bad_time.time_limit_s = -3.0;
    CHECK_THROWS_AS(solve(c5, bad_time), std::invalid_argument);
}

TEST_CASE("solve under a node limit stays feasible and reports the stop") {
    auto g = support::random_graph(40, 0.5, 31);
    SolverConfig config;
    config.s = 3;
    config.node_limit = 1;
    auto result = solve(g, config);
    CHECK(result.timed_out);
    CHECK(static_cast<int>(result.witness.size()) == result.best_size);
    CHECK(result.best_size >= generate_lb(g, 3, LbMode::randwalk).size());
}

TEST_CASE("solve is deterministic") {
    auto g = support::random_graph(12, 0.5, 77);
    SolverConfig config;
    config.s = 2;
    auto a = solve(g, config);
    auto b = solve(g, config);
    CHECK(a.best_size == b.best_size);
    CHECK(a.witness == b.witness);
    CHECK(a.tree_nodes == b.tree_nodes);
    CHECK(a.reduced_vertices == b.reduced_vertices);
    CHECK(a.reduced_edges == b.reduced_edges);
}

TEST_CASE("solver variants agree on the optimum") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        int n = 8 + static_cast<int>(seed % 4);
        auto g = support::random_graph(n, 0.5, 860 + seed);
        for (int s = 1; s <= 3; ++s) {
            SolverConfig config;
            config.s = s;
            int expected = solve(g, config).best_size;
            CHECK(expected == oracle::brute_force_max_s_bundle(g, s).size());

            SolverConfig nopre = config;
            nopre.preprocess = false;
            CHECK(solve(g, nopre).best_size == expected);

            SolverConfig greedy = config;
            greedy.lb_mode = LbMode::greedy;
            CHECK(solve(g, greedy).best_size == expected);

            SolverConfig nolb = config;
            nolb.lb_mode = LbMode::none;
            CHECK(solve(g, nolb).best_size == expected);

            SolverConfig color = config;
            color.bound.kind = BoundKind::color;
            CHECK(solve(g, color).best_size == expected);

            SolverConfig noexpand = config;
            noexpand.bound.expand = false;
            CHECK(solve(g, noexpand).best_size == expected);
        }
    }
}

TEST_SUITE_END();

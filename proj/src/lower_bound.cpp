#include "sbundle/lower_bound.hpp"

#include <stdexcept>

#include "sbundle/connectivity.hpp"

namespace sbundle {

VertexSet greedy_clique(const Graph& g) {
    int n = g.num_vertices();
    VertexSet clique(n);
    if (n == 0) return clique;
    int start = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(start)) start = v;
    clique.insert(start);
    VertexSet candidates = neighbor_set(g, start);
    while (!candidates.empty()) {
        int best = -1, best_score = -1;
        candidates.for_each([&](int u) {
            int score = 0;
            for (int w : g.neighbors(u))
                if (candidates.contains(w)) ++score;
            if (score > best_score) {
                best_score = score;
                best = u;
            }
        });
        clique.insert(best);
        candidates &= neighbor_set(g, best);
    }
    return clique;
}

std::vector<double> lazy_walk_scores(const Graph& g, const VertexSet& seed, int steps) {
    if (steps < 0) throw std::invalid_argument("lazy_walk_scores: negative steps");
    if (seed.universe() != g.num_vertices())
        throw std::invalid_argument("lazy_walk_scores: universe mismatch");
    auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<double> w(n, 0.0);
    seed.for_each([&](int v) { w[static_cast<std::size_t>(v)] = 1.0; });
    std::vector<double> next(n);
    for (int step = 0; step < steps; ++step) {
        for (std::size_t v = 0; v < n; ++v)
            next[v] = g.degree(static_cast<int>(v)) == 0 ? w[v] : w[v] / 2.0;
        for (std::size_t v = 0; v < n; ++v) {
            int deg = g.degree(static_cast<int>(v));
            if (deg == 0 || w[v] == 0.0) continue;
            double share = w[v] / (2.0 * deg);
            for (int u : g.neighbors(static_cast<int>(v))) next[static_cast<std::size_t>(u)] += share;
        }
        w.swap(next);
    }
    return w;
}

VertexSet expand_seed(const Graph& g, VertexSet seed, LbMode mode, const ExpansionHooks& hooks) {
    if (mode == LbMode::none) throw std::invalid_argument("expand_seed: mode none");
    if (seed.universe() != g.num_vertices())
        throw std::invalid_argument("expand_seed: universe mismatch");
    int n = g.num_vertices();
    VertexSet p = std::move(seed);
    VertexSet pool = VertexSet::full(n) - p;

    std::vector<int> in_p_count(static_cast<std::size_t>(n), 0);
    p.for_each([&](int v) {
        for (int w : g.neighbors(v)) ++in_p_count[static_cast<std::size_t>(w)];
    });

    std::vector<double> scores;
    bool scores_stale = true;

    auto sweep = [&] {
        std::vector<int> drop;
        pool.for_each([&](int u) {
            if (hooks.blocked && hooks.blocked(p, u, in_p_count[static_cast<std::size_t>(u)]))
                drop.push_back(u);
        });
        for (int u : drop) pool.erase(u);
    };

    sweep();
    while (!pool.empty()) {
        int pick = -1;
        if (mode == LbMode::randwalk) {
            if (scores_stale) {
                scores = lazy_walk_scores(g, p);
                scores_stale = false;
            }
            double best = -1.0;
            pool.for_each([&](int u) {
                if (scores[static_cast<std::size_t>(u)] > best) {
                    best = scores[static_cast<std::size_t>(u)];
                    pick = u;
                }
            });
        } else {
            int best = -1;
            pool.for_each([&](int u) {
                if (in_p_count[static_cast<std::size_t>(u)] > best) {
                    best = in_p_count[static_cast<std::size_t>(u)];
                    pick = u;
                }
            });
        }
        pool.erase(pick);
        if (hooks.can_add && hooks.can_add(p, pick)) {
            p.insert(pick);
            for (int w : g.neighbors(pick)) ++in_p_count[static_cast<std::size_t>(w)];
            scores_stale = true;
            sweep();
        }
    }
    return p;
}

VertexSet generate_lb(const Graph& g, int s, LbMode mode) {
    if (s < 1) throw std::invalid_argument("generate_lb: s < 1");
    if (mode == LbMode::none) throw std::invalid_argument("generate_lb: mode none");
    ExpansionHooks hooks;
    hooks.blocked = [s](const VertexSet& p, int, int neighbors_in_p) {
        return neighbors_in_p <= p.size() - s;
    };
    hooks.can_add = [&g, s](const VertexSet& p, int u) { return can_extend(g, p, u, s); };
    return expand_seed(g, greedy_clique(g), mode, hooks);
}

}  // namespace sbundle

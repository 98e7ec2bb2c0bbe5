#pragma once

#include <functional>
#include <vector>

#include "sbundle/graph.hpp"
#include "sbundle/vertex_set.hpp"

namespace sbundle {

enum class LbMode { randwalk, greedy, none };

// Greedy clique: start at the maximum-degree vertex, then repeatedly add the
// common neighbor with the most neighbors among the remaining candidates.
// All ties break toward the lowest id. Deterministic.
VertexSet greedy_clique(const Graph& g);

// Lazy random-walk diffusion from `seed`: weight 1 on each seed vertex, then
// `steps` rounds of w'(v) = w(v)/2 + sum over neighbors u of w(u)/(2 deg(u)).
// Isolated vertices keep their weight, so total weight stays |seed|.
// Deterministic.
std::vector<double> lazy_walk_scores(const Graph& g, const VertexSet& seed, int steps = 3);

struct ExpansionHooks {
    // Permanently removes u from the pool when true. Swept over the whole
    // pool on entry and again after every accepted vertex; neighbors_in_p is
    // |N(u) ∩ P| maintained by the driver.
    std::function<bool(const VertexSet& p, int u, int neighbors_in_p)> blocked;
    // Whether u may join P. Rejected vertices leave the pool for good.
    std::function<bool(const VertexSet& p, int u)> can_add;
};

// Generic growth loop shared by the heuristics: keeps a pool of candidate
// vertices and, until the pool empties, picks the most promising one
// (randwalk: highest diffusion score, recomputed whenever P changes;
// greedy: most neighbors in P; ties toward lowest id) and either accepts or
// discards it.
VertexSet expand_seed(const Graph& g, VertexSet seed, LbMode mode, const ExpansionHooks& hooks);

// Heuristic s-bundle: greedy clique seed expanded while feasibility holds,
// with pool vertices dropped once they have at most |P| - s neighbors in P
// (P only grows, so the deficit is permanent). Result induces an s-bundle.
VertexSet generate_lb(const Graph& g, int s, LbMode mode);

}  // namespace sbundle

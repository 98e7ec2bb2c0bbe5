#pragma once

#include <vector>

#include "sbundle/bounds.hpp"
#include "sbundle/graph.hpp"

namespace sbundle {

// Peeling rules. Each rule preserves every s-bundle strictly larger than lb:
// a deleted vertex or edge cannot belong to one.

// Removes every vertex of degree <= lb - s (one simultaneous sweep).
Graph low_degree_pass(const Graph& g, int s, int lb);

// Removes every edge whose endpoints share <= lb - 2s common neighbors.
Graph weak_edge_pass(const Graph& g, int s, int lb);

// Removes every vertex v whose neighborhood bound is at most lb - s, i.e.
// bound(G[N(v)]) + s <= lb caps any solution through v at lb. Vertices are
// visited in ascending id and deletions take effect immediately, so later
// neighborhoods are evaluated in the already-shrunken graph.
Graph neighborhood_bound_pass(const Graph& g, int s, int lb, BoundSpec spec = {});

struct ReducedGraph {
    Graph graph;
    std::vector<int> orig_ids;  // reduced id -> id in the graph handed to reduce()
};

// Full preprocessing pipeline: cheap passes to a fixpoint, one expensive
// neighborhood-bound sweep, then cheap passes to a fixpoint again.
ReducedGraph reduce(const Graph& g, int s, int lb, BoundSpec spec = {});

}  // namespace sbundle

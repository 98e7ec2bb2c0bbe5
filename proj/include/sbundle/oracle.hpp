#pragma once

#include "sbundle/graph.hpp"
#include "sbundle/vertex_set.hpp"

namespace sbundle::oracle {

// Reference implementations for testing. Deliberately share no code with the
// flow-based connectivity module: connectivity here is decided by exhaustive
// separator enumeration over bitmask subgraphs.

// Maximum-cardinality vertex set whose induced subgraph is an s-bundle.
// Ties broken toward the lexicographically smallest bitmask among sets of
// maximum size. Requires n <= 20, s >= 1.
VertexSet brute_force_max_s_bundle(const Graph& g, int s);

// Vertex connectivity: n-1 for complete graphs, otherwise the size of the
// smallest vertex set whose removal disconnects the graph. 0 when n <= 1.
// Requires n <= 16.
int brute_force_vertex_connectivity(const Graph& g);

// Minimum size of a vertex set W, disjoint from {u, v}, whose removal
// separates u from v. Requires u, v distinct and non-adjacent, n <= 16.
int brute_force_local_connectivity(const Graph& g, int u, int v);

// Exhaustive s-bundle test for one vertex set (same separator-based route).
bool brute_force_is_s_bundle(const Graph& g, const VertexSet& verts, int s);

}  // namespace sbundle::oracle

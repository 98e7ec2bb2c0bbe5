#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sbundle/vertex_set.hpp"

namespace sbundle {

// Immutable simple undirected graph on vertices {0, ..., n-1}.
// Adjacency lists are sorted ascending; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Self-loops and duplicate edges are dropped;
    // an endpoint outside [0, n) throws std::invalid_argument.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }

    std::span<const int> neighbors(int v) const { return adj_[check(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }

    bool has_edge(int u, int v) const;

    bool is_connected() const;

private:
    std::size_t check(int v) const;

    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Subgraph induced by `verts`, with vertices renumbered 0..k-1 in ascending
// order of original id; orig_ids maps new id -> original id.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> orig_ids;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& verts);

// Vertices adjacent to both u and v (u, v distinct).
VertexSet common_neighbors(const Graph& g, int u, int v);
int common_neighbor_count(const Graph& g, int u, int v);

VertexSet neighbor_set(const Graph& g, int v);

}  // namespace sbundle

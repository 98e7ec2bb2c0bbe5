#pragma once

#include <limits>
#include <vector>

#include "sbundle/graph.hpp"
#include "sbundle/vertex_set.hpp"

namespace sbundle {

// Unit-capacity flow network for vertex connectivity queries. Every vertex v
// of the source graph is split into in-node 2v and out-node 2v+1 joined by a
// capacity-1 arc; each undirected edge {u, v} becomes arcs out(u)->in(v) and
// out(v)->in(u). Max-flow from out(u) to in(v) then equals the number of
// internally vertex-disjoint u-v paths.
class FlowNetwork {
public:
    explicit FlowNetwork(const Graph& g);

    static int in_node(int v) { return 2 * v; }
    static int out_node(int v) { return 2 * v + 1; }

    int num_nodes() const { return static_cast<int>(arcs_.size()); }
    // Forward (capacity-1) arcs only; residual reverses are not counted.
    int num_forward_arcs() const { return forward_arcs_; }

    // Dinic max-flow, stopping early once `cap_limit` units have been pushed.
    // Residual capacities are reset on entry, so calls are independent.
    int max_flow(int source, int sink, int cap_limit = std::numeric_limits<int>::max());

private:
    struct Arc {
        int to;
        int rev;        // index of the reverse arc in arcs_[to]
        signed char cap;
        signed char initial_cap;
    };

    void add_arc(int from, int to);
    bool build_levels(int source, int sink);
    int push(int node, int sink, int limit);
    void reset();

    std::vector<std::vector<Arc>> arcs_;
    std::vector<int> level_;
    std::vector<int> next_arc_;
    int forward_arcs_ = 0;
};

// Number of internally vertex-disjoint paths between distinct vertices u, v,
// capped at cap_limit. Adjacent pairs are rejected: the split network has no
// finite answer for them.
int local_connectivity(const Graph& g, int u, int v,
                       int cap_limit = std::numeric_limits<int>::max());

// Whether the vertex connectivity of g is at least k. Complete graphs have
// connectivity n-1; otherwise the minimum of local connectivity over
// non-adjacent pairs decides. Graphs with fewer than two vertices have
// connectivity 0.
bool vertex_connectivity_at_least(const Graph& g, int k);

// Whether g itself (the whole vertex set) is an s-bundle: every subgraph on
// n > s vertices needs connectivity at least n - s. Requires s >= 1.
bool is_s_bundle(const Graph& g, int s);

// Whether members ∪ {u} induces an s-bundle; u must not already be a member.
bool can_extend(const Graph& g, const VertexSet& members, int u, int s);

}  // namespace sbundle

#include "sbundle/reduction.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace sbundle {
namespace {

std::vector<int> low_degree_survivors(const Graph& g, int s, int lb) {
    std::vector<int> keep;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) > lb - s) keep.push_back(v);
    return keep;
}

std::vector<std::pair<int, int>> strong_edges(const Graph& g, int s, int lb) {
    std::vector<std::pair<int, int>> keep;
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && common_neighbor_count(g, u, v) > lb - 2 * s)
                keep.emplace_back(u, v);
    return keep;
}

std::vector<int> neighborhood_bound_survivors(const Graph& g, int s, int lb, BoundSpec spec) {
    int n = g.num_vertices();
    VertexSet alive = VertexSet::full(n);
    BoundComputer bound(g);
    for (int v = 0; v < n; ++v) {
        VertexSet hood(n);
        for (int w : g.neighbors(v))
            if (alive.contains(w)) hood.insert(w);
        if (bound.value(hood, s, spec) <= lb - s) alive.erase(v);
    }
    return alive.to_vector();
}

Graph keep_vertices(const Graph& g, const std::vector<int>& survivors) {
    VertexSet verts(g.num_vertices());
    for (int v : survivors) verts.insert(v);
    return induced_subgraph(g, verts).graph;
}

void validate(const Graph&, int s, int lb) {
    if (s < 1) throw std::invalid_argument("reduction: s < 1");
    if (lb < 0) throw std::invalid_argument("reduction: negative lb");
}

}  // namespace

Graph low_degree_pass(const Graph& g, int s, int lb) {
    validate(g, s, lb);
    return keep_vertices(g, low_degree_survivors(g, s, lb));
}

Graph weak_edge_pass(const Graph& g, int s, int lb) {
    validate(g, s, lb);
    return Graph::from_edges(g.num_vertices(), strong_edges(g, s, lb));
}

Graph neighborhood_bound_pass(const Graph& g, int s, int lb, BoundSpec spec) {
    validate(g, s, lb);
    return keep_vertices(g, neighborhood_bound_survivors(g, s, lb, spec));
}

ReducedGraph reduce(const Graph& g, int s, int lb, BoundSpec spec) {
    validate(g, s, lb);
    ReducedGraph out;
    out.graph = g;
    out.orig_ids.resize(static_cast<std::size_t>(g.num_vertices()));
    std::iota(out.orig_ids.begin(), out.orig_ids.end(), 0);

    auto drop_vertices = [&](const std::vector<int>& survivors) {
        if (static_cast<int>(survivors.size()) == out.graph.num_vertices()) return false;
        std::vector<int> ids;
        ids.reserve(survivors.size());
        for (int v : survivors) ids.push_back(out.orig_ids[static_cast<std::size_t>(v)]);
        out.orig_ids = std::move(ids);
        out.graph = keep_vertices(out.graph, survivors);
        return true;
    };
    auto drop_edges = [&] {
        auto kept = strong_edges(out.graph, s, lb);
        if (static_cast<int>(kept.size()) == out.graph.num_edges()) return false;
        out.graph = Graph::from_edges(out.graph.num_vertices(), kept);
        return true;
    };
    auto cheap_fixpoint = [&](bool degree_first) {
        for (;;) {
            bool changed = false;
            if (degree_first) {
                changed |= drop_vertices(low_degree_survivors(out.graph, s, lb));
                changed |= drop_edges();
            } else {
                changed |= drop_edges();
                changed |= drop_vertices(low_degree_survivors(out.graph, s, lb));
            }
            if (!changed) break;
        }
    };

    cheap_fixpoint(true);
    drop_vertices(neighborhood_bound_survivors(out.graph, s, lb, spec));
    cheap_fixpoint(false);
    return out;
}

}  // namespace sbundle

#include "sbundle/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbundle {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    Graph g;
    g.adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint outside [0, n)");
        if (u == v) continue;
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.m_ += static_cast<int>(nbrs.size());
    }
    g.m_ /= 2;
    return g;
}

std::size_t Graph::check(int v) const {
    if (v < 0 || v >= num_vertices()) throw std::out_of_range("Graph: vertex id out of range");
    return static_cast<std::size_t>(v);
}

bool Graph::has_edge(int u, int v) const {
    const auto& nu = adj_[check(u)];
    check(v);
    return std::binary_search(nu.begin(), nu.end(), v);
}

bool Graph::is_connected() const {
    int n = num_vertices();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& verts) {
    if (verts.universe() != g.num_vertices())
        throw std::invalid_argument("induced_subgraph: universe mismatch");
    InducedSubgraph out;
    out.orig_ids = verts.to_vector();
    std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t i = 0; i < out.orig_ids.size(); ++i)
        local[static_cast<std::size_t>(out.orig_ids[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < out.orig_ids.size(); ++i)
        for (int w : g.neighbors(out.orig_ids[i])) {
            int lw = local[static_cast<std::size_t>(w)];
            if (lw > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), lw);
        }
    out.graph = Graph::from_edges(static_cast<int>(out.orig_ids.size()), edges);
    return out;
}

VertexSet common_neighbors(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighbors: identical endpoints");
    VertexSet out(g.num_vertices());
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) ++i;
        else if (nu[i] > nv[j]) ++j;
        else {
            out.insert(nu[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

int common_neighbor_count(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighbor_count: identical endpoints");
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    int count = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) ++i;
        else if (nu[i] > nv[j]) ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

VertexSet neighbor_set(const Graph& g, int v) {
    VertexSet out(g.num_vertices());
    for (int w : g.neighbors(v)) out.insert(w);
    return out;
}

}  // namespace sbundle

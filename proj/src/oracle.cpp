#include "sbundle/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sbundle::oracle {
namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << w;
    return adj;
}

bool mask_connected(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    if (mask == 0) return true;
    std::uint32_t reach = mask & (~mask + 1);
    for (;;) {
        std::uint32_t next = reach;
        std::uint32_t frontier = reach;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[static_cast<std::size_t>(v)] & mask;
        }
        if (next == reach) break;
        reach = next;
    }
    return reach == mask;
}

// Enumerates all size-j subsets W of `mask`; returns true if some G[mask \ W]
// is disconnected.
bool has_separator_of_size(const std::vector<std::uint32_t>& adj, std::uint32_t mask, int j) {
    std::vector<int> verts;
    std::uint32_t rest = mask;
    while (rest) {
        verts.push_back(std::countr_zero(rest));
        rest &= rest - 1;
    }
    int k = static_cast<int>(verts.size());
    if (j < 0 || j >= k) return false;
    if (j == 0) return !mask_connected(adj, mask);
    // Gosper's hack over index combinations.
    std::uint32_t comb = (std::uint32_t{1} << j) - 1;
    std::uint32_t limit = std::uint32_t{1} << k;
    while (comb < limit) {
        std::uint32_t w = 0;
        std::uint32_t c = comb;
        while (c) {
            w |= std::uint32_t{1} << verts[static_cast<std::size_t>(std::countr_zero(c))];
            c &= c - 1;
        }
        if (!mask_connected(adj, mask & ~w)) return true;
        std::uint32_t lo = comb & (~comb + 1);
        std::uint32_t ripple = comb + lo;
        comb = ripple | (((comb ^ ripple) >> 2) / lo);
    }
    return false;
}

bool mask_is_s_bundle(const std::vector<std::uint32_t>& adj, std::uint32_t mask, int s) {
    int k = std::popcount(mask);
    if (k <= s) return true;
    int required = k - s;
    bool complete = true;
    std::uint32_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int deg = std::popcount(adj[static_cast<std::size_t>(v)] & mask);
        if (deg < required) return false;
        if (deg != k - 1) complete = false;
    }
    if (complete) return true;
    for (int j = 0; j < required; ++j)
        if (has_separator_of_size(adj, mask, j)) return false;
    return true;
}

}  // namespace

VertexSet brute_force_max_s_bundle(const Graph& g, int s) {
    int n = g.num_vertices();
    if (n > 20) throw std::invalid_argument("brute_force_max_s_bundle: n > 20");
    if (s < 1) throw std::invalid_argument("brute_force_max_s_bundle: s < 1");
    auto adj = adjacency_masks(g);
    for (int k = n; k >= 1; --k) {
        std::uint32_t comb = (std::uint32_t{1} << k) - 1;
        std::uint32_t limit = std::uint32_t{1} << n;
        while (comb < limit) {
            if (mask_is_s_bundle(adj, comb, s)) {
                VertexSet out(n);
                std::uint32_t c = comb;
                while (c) {
                    out.insert(std::countr_zero(c));
                    c &= c - 1;
                }
                return out;
            }
            std::uint32_t lo = comb & (~comb + 1);
            std::uint32_t ripple = comb + lo;
            comb = ripple | (((comb ^ ripple) >> 2) / lo);
        }
    }
    return VertexSet(n);
}

int brute_force_vertex_connectivity(const Graph& g) {
    int n = g.num_vertices();
    if (n > 16) throw std::invalid_argument("brute_force_vertex_connectivity: n > 16");
    if (n <= 1) return 0;
    auto adj = adjacency_masks(g);
    std::uint32_t all = (std::uint32_t{1} << n) - 1;
    if (2 * g.num_edges() == n * (n - 1)) return n - 1;
    for (int j = 0;; ++j)
        if (has_separator_of_size(adj, all, j)) return j;
}

int brute_force_local_connectivity(const Graph& g, int u, int v) {
    int n = g.num_vertices();
    if (n > 16) throw std::invalid_argument("brute_force_local_connectivity: n > 16");
    if (u == v || g.has_edge(u, v))
        throw std::invalid_argument("brute_force_local_connectivity: endpoints must be distinct and non-adjacent");
    auto adj = adjacency_masks(g);
    std::uint32_t all = (std::uint32_t{1} << n) - 1;
    std::uint32_t ends = (std::uint32_t{1} << u) | (std::uint32_t{1} << v);
    std::vector<int> rest_verts;
    std::uint32_t rest = all & ~ends;
    while (rest) {
        rest_verts.push_back(std::countr_zero(rest));
        rest &= rest - 1;
    }
    int k = static_cast<int>(rest_verts.size());
    auto separated = [&](std::uint32_t w) {
        std::uint32_t mask = all & ~w;
        std::uint32_t reach = std::uint32_t{1} << u;
        for (;;) {
            std::uint32_t next = reach;
            std::uint32_t frontier = reach;
            while (frontier) {
                int x = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj[static_cast<std::size_t>(x)] & mask;
            }
            if (next == reach) break;
            reach = next;
        }
        return (reach >> v & 1) == 0;
    };
    for (int j = 0; j <= k; ++j) {
        if (j == 0) {
            if (separated(0)) return 0;
            continue;
        }
        std::uint32_t comb = (std::uint32_t{1} << j) - 1;
        std::uint32_t limit = std::uint32_t{1} << k;
        while (comb < limit) {
            std::uint32_t w = 0;
            std::uint32_t c = comb;
            while (c) {
                w |= std::uint32_t{1} << rest_verts[static_cast<std::size_t>(std::countr_zero(c))];
                c &= c - 1;
            }
            if (separated(w)) return j;
            std::uint32_t lo = comb & (~comb + 1);
            std::uint32_t ripple = comb + lo;
            comb = ripple | (((comb ^ ripple) >> 2) / lo);
        }
    }
    return k;
}

bool brute_force_is_s_bundle(const Graph& g, const VertexSet& verts, int s) {
    if (g.num_vertices() > 20) throw std::invalid_argument("brute_force_is_s_bundle: n > 20");
    if (s < 1) throw std::invalid_argument("brute_force_is_s_bundle: s < 1");
    auto adj = adjacency_masks(g);
    std::uint32_t mask = 0;
    verts.for_each([&](int v) { mask |= std::uint32_t{1} << v; });
    return mask_is_s_bundle(adj, mask, s);
}

}  // namespace sbundle::oracle

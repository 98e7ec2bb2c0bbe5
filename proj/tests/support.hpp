#pragma once

// Deterministic graph generators and small helpers shared by the tests.

#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "sbundle/graph.hpp"
#include "sbundle/vertex_set.hpp"

namespace support {

using sbundle::Graph;
using sbundle::VertexSet;

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    return Graph::from_edges(n, edges);
}

// Top 53 bits to a double in [0, 1); identical on every platform, unlike the
// standard distributions.
inline double next_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Graph random_graph(int n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (next_double(rng) < density) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

// Center 0, leaves 1..leaves.
inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, edges);
}

// 2^bits codewords; edge when the Hamming distance is at least min_distance.
inline Graph hamming_distance_graph(int bits, int min_distance) {
    int n = 1 << bits;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::popcount(static_cast<unsigned>(u ^ v)) >= min_distance)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Fault-diagnosis ring: floor(n / (c ln n)) cyclic classes of near-equal size
// (the larger classes consecutive at the front), each class a clique,
// consecutive classes fully joined.
inline Graph fat_ring_graph(int n, double c) {
    if (n < 2) return complete_graph(n);
    int k = std::max(static_cast<int>(n / (c * std::log(n))), 1);
    std::vector<int> cls(static_cast<std::size_t>(n));
    int q = n / k, r = n % k, v = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < q + (i < r ? 1 : 0); ++j) cls[static_cast<std::size_t>(v++)] = i;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            int d = cls[static_cast<std::size_t>(w)] - cls[static_cast<std::size_t>(u)];
            if (d == 0 || d == 1 || d == k - 1) edges.emplace_back(u, w);
        }
    return Graph::from_edges(n, edges);
}

inline VertexSet set_of(int universe, std::initializer_list<int> ids) {
    VertexSet s(universe);
    for (int v : ids) s.insert(v);
    return s;
}

// Size of the largest connected component, 0 for the empty graph.
inline int largest_component_size(const Graph& g) {
    int n = g.num_vertices(), best = 0;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        queue.assign(1, start);
        seen[static_cast<std::size_t>(start)] = 1;
        int count = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++count;
            for (int w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
        }
        best = std::max(best, count);
    }
    return best;
}

}  // namespace support

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sbundle/graph.hpp"
#include "sbundle/vertex_set.hpp"

namespace sbundle {

// Union-find with component sizes. reset() is O(1): entries are revalidated
// lazily against an epoch counter, so a computation that repeatedly needs a
// fresh structure of the same size pays only for the elements it touches.
class DisjointSetUnion {
public:
    explicit DisjointSetUnion(int n);

    int size() const { return n_; }
    void reset() { ++epoch_; }

    int find(int x);
    // Merges the sets of x and y; returns false if they were already one.
    bool unite(int x, int y);
    int component_size(int x) { return size_[static_cast<std::size_t>(find(x))]; }

private:
    void touch(int x);

    int n_;
    std::uint64_t epoch_ = 1;
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<std::uint64_t> stamp_;
};

// Whether a new vertex adjacent to the given component roots can join a
// vertex set partitioned by `dsu` without creating a connected component of
// more than s vertices: 1 + total size of the distinct root components <= s.
// Duplicate roots are tolerated and counted once.
bool dsu_can_add(DisjointSetUnion& dsu, int s, std::span<const int> neighbor_roots);

enum class BoundKind { partition, color };

struct BoundSpec {
    BoundKind kind = BoundKind::partition;
    // When false, parts grow by direct sequential insertion instead of the
    // two-phase independent-set seed plus expansion. Ignored for color.
    bool expand = true;
};

struct Partition {
    std::vector<VertexSet> sets;          // disjoint cover of the queried verts
    std::vector<int> contributions;       // min(|set|, s) per set
};

struct BoundResult {
    int value = 0;
    Partition partition;
};

// Reusable evaluator over one graph; keeps O(n) scratch so repeated calls on
// small vertex subsets cost O(|verts| + edges within) rather than O(n).
class BoundComputer {
public:
    explicit BoundComputer(const Graph& g);

    int value(const VertexSet& verts, int s, BoundSpec spec, Partition* out = nullptr);

private:
    const Graph* g_;
    DisjointSetUnion dsu_{0};
    std::vector<int> local_;        // vertex -> index within current call, or -1
    std::vector<int> members_;
    std::vector<int> part_members_;
    std::vector<int> roots_;
    std::vector<char> unassigned_;
    std::vector<char> in_part_;
    std::vector<char> seed_alive_;
    std::vector<std::uint64_t> root_seen_;
    std::uint64_t scan_counter_ = 0;
};

// Upper bound on the largest s-bundle inside G[verts]: the queried vertices
// are partitioned into parts whose induced components never exceed s
// vertices, and each part can contribute at most min(|part|, s).
BoundResult partition_bound(const Graph& g, const VertexSet& verts, int s);
int partition_bound_value(const Graph& g, const VertexSet& verts, int s);

// Same partition argument restricted to independent sets (no expansion).
int color_bound(const Graph& g, const VertexSet& verts, int s);

int bound_value(const Graph& g, const VertexSet& verts, int s, BoundSpec spec);

}  // namespace sbundle

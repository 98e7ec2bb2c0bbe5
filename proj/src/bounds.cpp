#include "sbundle/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbundle {

DisjointSetUnion::DisjointSetUnion(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("DisjointSetUnion: negative size");
    parent_.resize(static_cast<std::size_t>(n));
    size_.resize(static_cast<std::size_t>(n));
    stamp_.resize(static_cast<std::size_t>(n), 0);
}

void DisjointSetUnion::touch(int x) {
    if (x < 0 || x >= n_) throw std::out_of_range("DisjointSetUnion: element out of range");
    auto i = static_cast<std::size_t>(x);
    if (stamp_[i] != epoch_) {
        stamp_[i] = epoch_;
        parent_[i] = x;
        size_[i] = 1;
    }
}

int DisjointSetUnion::find(int x) {
    touch(x);
    auto i = static_cast<std::size_t>(x);
    while (parent_[i] != x) {
        auto p = static_cast<std::size_t>(parent_[i]);
        parent_[i] = parent_[p];
        x = parent_[i];
        i = static_cast<std::size_t>(x);
    }
    return x;
}

bool DisjointSetUnion::unite(int x, int y) {
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) return false;
    if (size_[static_cast<std::size_t>(rx)] < size_[static_cast<std::size_t>(ry)])
        std::swap(rx, ry);
    parent_[static_cast<std::size_t>(ry)] = rx;
    size_[static_cast<std::size_t>(rx)] += size_[static_cast<std::size_t>(ry)];
    return true;
}

bool dsu_can_add(DisjointSetUnion& dsu, int s, std::span<const int> neighbor_roots) {
    if (s < 1) throw std::invalid_argument("dsu_can_add: s < 1");
    long long total = 1;
    for (std::size_t i = 0; i < neighbor_roots.size(); ++i) {
        int r = dsu.find(neighbor_roots[i]);
        bool duplicate = false;
        for (std::size_t j = 0; j < i; ++j)
            if (dsu.find(neighbor_roots[j]) == r) {
                duplicate = true;
                break;
            }
        if (!duplicate) total += dsu.component_size(r);
        if (total > s) return false;
    }
    return true;
}

BoundComputer::BoundComputer(const Graph& g)
    : g_(&g), local_(static_cast<std::size_t>(g.num_vertices()), -1) {}

int BoundComputer::value(const VertexSet& verts, int s, BoundSpec spec, Partition* out) {
    if (s < 1) throw std::invalid_argument("BoundComputer: s < 1");
    if (verts.universe() != g_->num_vertices())
        throw std::invalid_argument("BoundComputer: universe mismatch");

    members_.clear();
    verts.for_each([&](int v) { members_.push_back(v); });
    const int k = static_cast<int>(members_.size());
    for (int i = 0; i < k; ++i) local_[static_cast<std::size_t>(members_[i])] = i;

    const bool seed_phase = spec.kind == BoundKind::color || spec.expand;
    const bool grow_phase = spec.kind == BoundKind::partition;

    unassigned_.assign(static_cast<std::size_t>(k), 1);
    in_part_.assign(static_cast<std::size_t>(k), 0);
    if (seed_phase) seed_alive_.resize(static_cast<std::size_t>(k));
    if (grow_phase) root_seen_.assign(static_cast<std::size_t>(k), 0);
    if (dsu_.size() < k) dsu_ = DisjointSetUnion(k);

    int remaining = k;
    int bound = 0;
    while (remaining > 0) {
        dsu_.reset();
        part_members_.clear();
        auto take = [&](int idx) {
            unassigned_[static_cast<std::size_t>(idx)] = 0;
            in_part_[static_cast<std::size_t>(idx)] = 1;
            part_members_.push_back(idx);
            --remaining;
        };

        if (seed_phase) {
            // Maximal independent set among unassigned vertices, ascending id.
            std::copy(unassigned_.begin(), unassigned_.end(), seed_alive_.begin());
            for (int idx = 0; idx < k; ++idx) {
                if (!seed_alive_[static_cast<std::size_t>(idx)]) continue;
                take(idx);
                seed_alive_[static_cast<std::size_t>(idx)] = 0;
                for (int w : g_->neighbors(members_[static_cast<std::size_t>(idx)])) {
                    int lw = local_[static_cast<std::size_t>(w)];
                    if (lw >= 0) seed_alive_[static_cast<std::size_t>(lw)] = 0;
                }
            }
        }

        if (grow_phase) {
            // Insert any unassigned vertex whose addition keeps every induced
            // component of the part at or below s vertices.
            for (int idx = 0; idx < k; ++idx) {
                if (!unassigned_[static_cast<std::size_t>(idx)]) continue;
                roots_.clear();
                ++scan_counter_;
                for (int w : g_->neighbors(members_[static_cast<std::size_t>(idx)])) {
                    int lw = local_[static_cast<std::size_t>(w)];
                    if (lw < 0 || !in_part_[static_cast<std::size_t>(lw)]) continue;
                    int r = dsu_.find(lw);
                    if (root_seen_[static_cast<std::size_t>(r)] != scan_counter_) {
                        root_seen_[static_cast<std::size_t>(r)] = scan_counter_;
                        roots_.push_back(r);
                    }
                }
                if (!dsu_can_add(dsu_, s, roots_)) continue;
                for (int r : roots_) dsu_.unite(idx, r);
                take(idx);
            }
        }

        int part_size = static_cast<int>(part_members_.size());
        bound += std::min(part_size, s);
        if (out) {
            VertexSet set(g_->num_vertices());
            for (int idx : part_members_) set.insert(members_[static_cast<std::size_t>(idx)]);
            out->sets.push_back(std::move(set));
            out->contributions.push_back(std::min(part_size, s));
        }
        for (int idx : part_members_) in_part_[static_cast<std::size_t>(idx)] = 0;
    }

    for (int v : members_) local_[static_cast<std::size_t>(v)] = -1;
    return bound;
}

BoundResult partition_bound(const Graph& g, const VertexSet& verts, int s) {
    BoundComputer computer(g);
    BoundResult result;
    result.value = computer.value(verts, s, BoundSpec{}, &result.partition);
    return result;
}

int partition_bound_value(const Graph& g, const VertexSet& verts, int s) {
    return BoundComputer(g).value(verts, s, BoundSpec{});
}

int color_bound(const Graph& g, const VertexSet& verts, int s) {
    return BoundComputer(g).value(verts, s, BoundSpec{BoundKind::color, true});
}

int bound_value(const Graph& g, const VertexSet& verts, int s, BoundSpec spec) {
    return BoundComputer(g).value(verts, s, spec);
}

}  // namespace sbundle

#include "sbundle/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbundle {

FlowNetwork::FlowNetwork(const Graph& g) {
    int n = g.num_vertices();
    arcs_.resize(static_cast<std::size_t>(2 * n));
    level_.resize(arcs_.size());
    next_arc_.resize(arcs_.size());
    for (int v = 0; v < n; ++v) add_arc(in_node(v), out_node(v));
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            if (v < w) {
                add_arc(out_node(v), in_node(w));
                add_arc(out_node(w), in_node(v));
            }
}

void FlowNetwork::add_arc(int from, int to) {
    auto& fwd = arcs_[static_cast<std::size_t>(from)];
    auto& bwd = arcs_[static_cast<std::size_t>(to)];
    fwd.push_back({to, static_cast<int>(bwd.size()), 1, 1});
    bwd.push_back({from, static_cast<int>(fwd.size()) - 1, 0, 0});
    ++forward_arcs_;
}

void FlowNetwork::reset() {
    for (auto& list : arcs_)
        for (Arc& a : list) a.cap = a.initial_cap;
}

bool FlowNetwork::build_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    level_[static_cast<std::size_t>(source)] = 0;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (const Arc& a : arcs_[static_cast<std::size_t>(v)])
            if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
                level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
                queue.push_back(a.to);
            }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
}

int FlowNetwork::push(int node, int sink, int limit) {
    if (node == sink) return limit;
    int pushed = 0;
    auto& list = arcs_[static_cast<std::size_t>(node)];
    for (int& i = next_arc_[static_cast<std::size_t>(node)];
         i < static_cast<int>(list.size()); ++i) {
        Arc& a = list[static_cast<std::size_t>(i)];
        if (a.cap <= 0 ||
            level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(node)] + 1)
            continue;
        int got = push(a.to, sink, std::min(limit - pushed, static_cast<int>(a.cap)));
        if (got == 0) continue;
        a.cap = static_cast<signed char>(a.cap - got);
        auto& rev = arcs_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)];
        rev.cap = static_cast<signed char>(rev.cap + got);
        pushed += got;
        if (pushed == limit) return pushed;
    }
    level_[static_cast<std::size_t>(node)] = -1;
    return pushed;
}

int FlowNetwork::max_flow(int source, int sink, int cap_limit) {
    if (source < 0 || source >= num_nodes() || sink < 0 || sink >= num_nodes())
        throw std::out_of_range("FlowNetwork::max_flow: node out of range");
    if (source == sink) throw std::invalid_argument("FlowNetwork::max_flow: source equals sink");
    if (cap_limit < 0) throw std::invalid_argument("FlowNetwork::max_flow: negative cap_limit");
    reset();
    int flow = 0;
    while (flow < cap_limit && build_levels(source, sink)) {
        std::fill(next_arc_.begin(), next_arc_.end(), 0);
        flow += push(source, sink, cap_limit - flow);
    }
    return flow;
}

int local_connectivity(const Graph& g, int u, int v, int cap_limit) {
    if (u == v) throw std::invalid_argument("local_connectivity: identical endpoints");
    if (g.has_edge(u, v)) throw std::invalid_argument("local_connectivity: endpoints adjacent");
    FlowNetwork net(g);
    return net.max_flow(FlowNetwork::out_node(u), FlowNetwork::in_node(v), cap_limit);
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
    if (k <= 0) return true;
    int n = g.num_vertices();
    if (n <= 1) return false;
    if (2 * g.num_edges() == n * (n - 1)) return n - 1 >= k;
    FlowNetwork net(g);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (net.max_flow(FlowNetwork::out_node(u), FlowNetwork::in_node(v), k) < k)
                return false;
        }
    return true;
}

bool is_s_bundle(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("is_s_bundle: s < 1");
    int n = g.num_vertices();
    if (n <= s) return true;
    // Degree bound: connectivity n - s forces minimum degree n - s.
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < n - s) return false;
    if (!g.is_connected()) return false;
    return vertex_connectivity_at_least(g, n - s);
}

bool can_extend(const Graph& g, const VertexSet& members, int u, int s) {
    if (members.contains(u)) throw std::invalid_argument("can_extend: u already a member");
    VertexSet extended = members;
    extended.insert(u);
    return is_s_bundle(induced_subgraph(g, extended).graph, s);
}

}  // namespace sbundle

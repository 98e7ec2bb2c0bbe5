#include "sbundle/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "sbundle/connectivity.hpp"
#include "sbundle/reduction.hpp"

namespace sbundle {
namespace {

using Clock = std::chrono::steady_clock;

void remove_candidate(const Graph& g, SearchState& st, int u) {
    st.candidates.erase(u);
    for (int w : g.neighbors(u))
        if (st.members.contains(w) || st.candidates.contains(w))
            --st.degree_in_union[static_cast<std::size_t>(w)];
}

void commit_candidate(const Graph& g, SearchState& st, int u) {
    st.candidates.erase(u);
    st.members.insert(u);
    for (int w : g.neighbors(u))
        if (st.members.contains(w) || st.candidates.contains(w))
            ++st.neighbors_in_members[static_cast<std::size_t>(w)];
}

// Shared by the public reduce_candidates and every search node.
bool filter_candidates_impl(const Graph& g, SearchState& st, int s, int lb) {
    std::vector<int> scan;
    for (;;) {
        bool changed = false;
        scan = st.candidates.to_vector();
        for (int u : scan)
            if (st.candidates.contains(u) &&
                st.degree_in_union[static_cast<std::size_t>(u)] <= lb - s) {
                remove_candidate(g, st, u);
                changed = true;
            }
        int member_count = st.members.size();
        scan = st.candidates.to_vector();
        for (int u : scan)
            if (st.neighbors_in_members[static_cast<std::size_t>(u)] <= member_count - s) {
                remove_candidate(g, st, u);
                changed = true;
            }
        std::vector<int> saturated;
        st.members.for_each([&](int v) {
            if (st.neighbors_in_members[static_cast<std::size_t>(v)] == member_count - s)
                saturated.push_back(v);
        });
        for (int v : saturated) {
            scan = st.candidates.to_vector();
            for (int u : scan)
                if (!g.has_edge(v, u)) {
                    remove_candidate(g, st, u);
                    changed = true;
                }
        }
        if (!changed) break;
    }
    bool dead = false;
    st.members.for_each([&](int v) {
        if (st.degree_in_union[static_cast<std::size_t>(v)] <= lb - s) dead = true;
    });
    return dead;
}

class Searcher {
public:
    Searcher(const Graph& g, int s, BoundSpec spec, std::optional<Clock::time_point> deadline,
             std::uint64_t node_limit)
        : g_(&g), s_(s), spec_(spec), deadline_(deadline), node_limit_(node_limit),
          bound_(g), witness_(g.num_vertices()) {}

    void set_incumbent(int size) { best_ = size; }

    void run(SearchState root) { search(std::move(root)); }

    int best() const { return best_; }
    bool improved() const { return have_witness_; }
    const VertexSet& witness() const { return witness_; }
    std::uint64_t nodes() const { return nodes_; }
    bool stopped_early() const { return stopped_; }

private:
    bool should_stop() {
        if (stopped_) return true;
        if (node_limit_ > 0 && nodes_ >= node_limit_) stopped_ = true;
        else if (deadline_ && Clock::now() >= *deadline_) stopped_ = true;
        return stopped_;
    }

    void record(const VertexSet& set) {
        if (set.size() > best_) {
            best_ = set.size();
            witness_ = set;
            have_witness_ = true;
        }
    }

    // Feasibility of members ∪ {u}; members alone is feasible by invariant.
    bool may_join(const SearchState& st, int u) { return can_extend(*g_, st.members, u, s_); }

    void search(SearchState st) {
        ++nodes_;
        if (should_stop()) return;
        if (st.members.size() > best_) record(st.members);
        if (filter_candidates_impl(*g_, st, s_, best_)) return;

        VertexSet all = st.members | st.candidates;
        int total = all.size();
        if (total <= best_) return;
        if (bound_.value(all, s_, spec_) <= best_) return;

        int pivot = -1, pivot_degree = total;
        all.for_each([&](int v) {
            if (st.degree_in_union[static_cast<std::size_t>(v)] < pivot_degree) {
                pivot_degree = st.degree_in_union[static_cast<std::size_t>(v)];
                pivot = v;
            }
        });

        if (pivot_degree >= total - s_) {
            // High minimum degree: test whether everything left already works.
            if (is_s_bundle(induced_subgraph(*g_, all).graph, s_)) {
                record(all);
                return;
            }
            int u = -1, du = total;
            st.candidates.for_each([&](int v) {
                if (st.degree_in_union[static_cast<std::size_t>(v)] < du) {
                    du = st.degree_in_union[static_cast<std::size_t>(v)];
                    u = v;
                }
            });
            {
                SearchState child = st;
                remove_candidate(*g_, child, u);
                search(std::move(child));
            }
            if (stopped_ || !may_join(st, u)) return;
            commit_candidate(*g_, st, u);
            search(std::move(st));
            return;
        }

        if (!st.members.contains(pivot)) {
            {
                SearchState child = st;
                remove_candidate(*g_, child, pivot);
                search(std::move(child));
            }
            if (stopped_ || !may_join(st, pivot)) return;
            commit_candidate(*g_, st, pivot);
        }

        // A solution through pivot keeps its degree at |solution| - s or
        // higher, so it admits only `quota` more vertices outside N(pivot).
        std::vector<int> outsiders;
        st.candidates.for_each([&](int u) {
            if (!g_->has_edge(pivot, u)) outsiders.push_back(u);
        });
        std::sort(outsiders.begin(), outsiders.end(), [&](int a, int b) {
            int da = st.degree_in_union[static_cast<std::size_t>(a)];
            int db = st.degree_in_union[static_cast<std::size_t>(b)];
            return da != db ? da < db : a < b;
        });
        int quota = s_ - st.members.size() +
                    st.neighbors_in_members[static_cast<std::size_t>(pivot)];
        int branches = std::min(std::max(quota, 0), static_cast<int>(outsiders.size()));
        for (int i = 0; i < branches; ++i) {
            int v = outsiders[static_cast<std::size_t>(i)];
            {
                SearchState child = st;
                remove_candidate(*g_, child, v);
                search(std::move(child));
            }
            if (stopped_ || !may_join(st, v)) return;
            commit_candidate(*g_, st, v);
        }
        for (std::size_t i = static_cast<std::size_t>(branches); i < outsiders.size(); ++i)
            remove_candidate(*g_, st, outsiders[i]);
        search(std::move(st));
    }

    const Graph* g_;
    int s_;
    BoundSpec spec_;
    std::optional<Clock::time_point> deadline_;
    std::uint64_t node_limit_;
    BoundComputer bound_;
    int best_ = 0;
    bool have_witness_ = false;
    VertexSet witness_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
};

void check_state(const Graph& g, const VertexSet& members, const VertexSet& candidates) {
    if (members.universe() != g.num_vertices() || candidates.universe() != g.num_vertices())
        throw std::invalid_argument("SearchState: universe mismatch");
    if (!(members & candidates).empty())
        throw std::invalid_argument("SearchState: members and candidates overlap");
}

}  // namespace

SearchState make_state(const Graph& g, const VertexSet& members, const VertexSet& candidates) {
    check_state(g, members, candidates);
    SearchState st{members, candidates,
                   std::vector<int>(static_cast<std::size_t>(g.num_vertices()), 0),
                   std::vector<int>(static_cast<std::size_t>(g.num_vertices()), 0)};
    VertexSet all = members | candidates;
    all.for_each([&](int v) {
        for (int w : g.neighbors(v)) {
            if (all.contains(w)) ++st.degree_in_union[static_cast<std::size_t>(v)];
            if (members.contains(w)) ++st.neighbors_in_members[static_cast<std::size_t>(v)];
        }
    });
    return st;
}

SearchState root_state(const Graph& g) {
    return make_state(g, VertexSet(g.num_vertices()), VertexSet::full(g.num_vertices()));
}

bool reduce_candidates(const Graph& g, SearchState& state, int s, int lb) {
    if (s < 1) throw std::invalid_argument("reduce_candidates: s < 1");
    check_state(g, state.members, state.candidates);
    return filter_candidates_impl(g, state, s, lb);
}

int bnb(const Graph& g, int s, SearchState state, int lb) {
    if (s < 1) throw std::invalid_argument("bnb: s < 1");
    check_state(g, state.members, state.candidates);
    Searcher searcher(g, s, BoundSpec{}, std::nullopt, 0);
    searcher.set_incumbent(lb);
    searcher.run(std::move(state));
    return searcher.best();
}

SolverResult solve(const Graph& g, const SolverConfig& config) {
    if (config.s < 1) throw std::invalid_argument("solve: s < 1");
    if (!(config.time_limit_s > 0)) throw std::invalid_argument("solve: time limit must be positive");
    auto start = Clock::now();
    std::optional<Clock::time_point> deadline;
    // Past ~30 years the cast to the clock's tick type would overflow.
    if (config.time_limit_s < 1e9)
        deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(config.time_limit_s));

    VertexSet incumbent(g.num_vertices());
    if (config.lb_mode != LbMode::none) incumbent = generate_lb(g, config.s, config.lb_mode);

    ReducedGraph reduced;
    if (config.preprocess) {
        reduced = reduce(g, config.s, incumbent.size(), config.bound);
    } else {
        reduced.graph = g;
        reduced.orig_ids.resize(static_cast<std::size_t>(g.num_vertices()));
        std::iota(reduced.orig_ids.begin(), reduced.orig_ids.end(), 0);
    }

    Searcher searcher(reduced.graph, config.s, config.bound, deadline, config.node_limit);
    searcher.set_incumbent(incumbent.size());
    searcher.run(root_state(reduced.graph));

    SolverResult result;
    result.best_size = searcher.best();
    result.tree_nodes = searcher.nodes();
    result.reduced_vertices = reduced.graph.num_vertices();
    result.reduced_edges = reduced.graph.num_edges();
    result.timed_out = searcher.stopped_early();
    if (searcher.improved()) {
        searcher.witness().for_each([&](int v) {
            result.witness.push_back(reduced.orig_ids[static_cast<std::size_t>(v)]);
        });
        std::sort(result.witness.begin(), result.witness.end());
    } else {
        result.witness = incumbent.to_vector();
    }
    result.time_seconds = std::chrono::duration<double>(Clock::now() - start).count();

    VertexSet check(g.num_vertices());
    for (int v : result.witness) check.insert(v);
    if (check.size() != result.best_size ||
        !is_s_bundle(induced_subgraph(g, check).graph, config.s))
        throw std::logic_error("solve: witness failed verification");
    return result;
}

}  // namespace sbundle

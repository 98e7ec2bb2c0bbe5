#pragma once

#include <cstdint>
#include <vector>

#include "sbundle/bounds.hpp"
#include "sbundle/graph.hpp"
#include "sbundle/lower_bound.hpp"
#include "sbundle/vertex_set.hpp"

namespace sbundle {

// One branch-and-bound node: a feasible partial solution `members` (already
// an s-bundle) plus disjoint extension candidates. The degree arrays are
// maintained incrementally and are meaningful only for vertices currently in
// members ∪ candidates.
struct SearchState {
    VertexSet members;
    VertexSet candidates;
    std::vector<int> degree_in_union;      // degree within G[members ∪ candidates]
    std::vector<int> neighbors_in_members;
};

SearchState make_state(const Graph& g, const VertexSet& members, const VertexSet& candidates);
SearchState root_state(const Graph& g);

// Candidate filtering at one node against incumbent size lb. Applies, to a
// fixpoint: (a) drop candidates whose union degree caps any solution through
// them at lb; (b) drop candidates with too few neighbors in members to stay
// feasible; (c) once a member has no slack left, drop candidates not adjacent
// to it. Returns true when the whole node is dead: some member's union degree
// caps every completion at lb.
bool reduce_candidates(const Graph& g, SearchState& state, int s, int lb);

// Multi-branching search below `state`; returns the best s-bundle size found,
// at least lb. `state.members` must induce an s-bundle.
int bnb(const Graph& g, int s, SearchState state, int lb);

struct SolverConfig {
    int s = 1;
    double time_limit_s = 3600.0;    // must be positive
    std::uint64_t node_limit = 0;    // 0 disables the limit
    LbMode lb_mode = LbMode::randwalk;
    BoundSpec bound;
    bool preprocess = true;
};

struct SolverResult {
    int best_size = 0;
    std::vector<int> witness;        // ascending vertex ids in the input graph
    std::uint64_t tree_nodes = 0;
    int reduced_vertices = 0;
    int reduced_edges = 0;
    double time_seconds = 0.0;
    bool timed_out = false;          // hit the time or node limit; result is a valid lower bound
};

// Exact maximum s-bundle: heuristic incumbent, graph peeling against it, then
// branch-and-bound on the reduced graph. The witness is re-verified against
// the input graph before returning; a verification failure throws
// std::logic_error.
SolverResult solve(const Graph& g, const SolverConfig& config);

}  // namespace sbundle

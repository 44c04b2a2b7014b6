#ifndef EDC_PACKING_HPP
#define EDC_PACKING_HPP

#include <array>
#include <climits>
#include <vector>

#include "edc/graph.hpp"

namespace edc {

struct CyclePacking {
    // each cycle as its vertex sequence v0 v1 ... v_{l-1}, implicitly closed
    std::vector<std::vector<int>> cycles;
    int size() const { return static_cast<int>(cycles.size()); }
};

// Checks cycle validity (length >= 3, distinct vertices, consecutive
// adjacency in g) and pairwise edge-disjointness.
bool verify_packing(const Graph& g, const CyclePacking& p);

struct PackingResult {
    int phi = 0;
    CyclePacking witness;
    bool proven_optimal = false;
    long long nodes_explored = 0;
};

inline constexpr long long kDefaultPackingBudget = 1'000'000;

// Exact branch-and-bound for the maximum number of edge-disjoint cycles.
// Branches on the cycles through one edge at a minimum-degree vertex versus
// discarding that edge; bound is min(floor(m/3), m - n + c) on the trimmed
// residual. If stop_at is reached the search returns early with a witness of
// that size (proven_optimal then only means phi >= stop_at was established
// or the search finished). Requires n <= 64.
PackingResult max_cycle_packing(const Graph& g,
                                long long budget = kDefaultPackingBudget,
                                int stop_at = INT_MAX);

// Independent oracle: enumerate every cycle, then exact maximum set packing
// over edge bitmasks. Guards: at most 10^4 cycles, at most 64 edges.
int brute_force_phi(const Graph& g);

// All simple cycles of g, as vertex sequences (deterministic order).
std::vector<std::vector<int>> all_cycles(const Graph& g);

// min(floor(e/3), e - v + c): cycles need 3 edges and are GF(2)-independent.
int phi_upper_bound(const Graph& g);

struct ApexTreeInstance {
    Graph tree;
    std::vector<int> apex_neighbors;  // subset S of the tree's vertices
};

// Constructive packing of floor(|S|/2) cycles in the graph formed by joining
// a new apex vertex (label v(tree)) to S. Follows the pendant-path
// extraction scheme: prune to the minimal subtree spanning S, then repeatedly
// close either one pendant path with both ends in S or two pendant paths
// hanging off a shared branching vertex.
CyclePacking apex_tree_packing(const ApexTreeInstance& inst);

struct PeelResult {
    int q = 0;
    Graph residual;
    std::vector<std::array<int, 3>> peeled;
};

// Repeatedly removes the edges of the lexicographically smallest triangle
// until the residual is triangle-free.
PeelResult greedy_triangle_peel(const Graph& g);

// Builds the bipartite incidence graph between the given edge-disjoint
// triangles and the vertices lying on at least two of them; true iff acyclic.
bool triangle_incidence_forest(const std::vector<std::array<int, 3>>& tris);

}  // namespace edc

#endif

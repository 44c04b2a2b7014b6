#ifndef EDC_GRAPH_HPP
#define EDC_GRAPH_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edc {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1.
// Neighbor lists are kept sorted; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    // Inserts u-v, keeping lists sorted; duplicate insertions are ignored.
    void add_edge(int u, int v);

    std::vector<Edge> edges() const;  // each as (u,v) with u < v, lexicographic

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_;
    }

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// -- constructors for the standard families -------------------------------

Graph edgeless(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);  // K_{1,leaves}, center = 0

// k triangles sharing one common vertex; center gets the highest label 2k.
// friendship(0) is a single vertex.
Graph friendship(int k);

// K_1 joined to h: one new vertex, labeled v(h), adjacent to every vertex of h.
Graph join_apex(const Graph& h);

Graph disjoint_union(std::span<const Graph> gs);
inline Graph disjoint_union(std::initializer_list<Graph> gs) {
    return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

// -- structural queries ---------------------------------------------------

std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);

// Subgraph on `verts`, relabeled densely in the order given.
// If old_to_new is non-null it receives a map of size v(g) with -1 for dropped
// vertices.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* old_to_new = nullptr);
Graph remove_vertex(const Graph& g, int v, std::vector<int>* old_to_new = nullptr);
Graph remove_edges(const Graph& g, const std::vector<Edge>& edges);

std::vector<std::array<int, 3>> triangles(const Graph& g);
int t_count(const Graph& g);

// Vertices of degree n-1.
std::vector<int> dominating_vertices(const Graph& g);

}  // namespace edc

#endif

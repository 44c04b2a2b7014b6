#include "edc/graph.hpp"

#include <algorithm>
#include <numeric>

namespace edc {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        g.add_edge(u, v);
    }
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    auto& nu = adj_.at(u);
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;  // already present
    nu.insert(it, v);
    auto& nv = adj_.at(v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nu = adj_.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> es;
    es.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

Graph edgeless(int n) { return Graph(n); }

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph friendship(int k) {
    if (k < 0) throw std::invalid_argument("negative k");
    if (k == 0) return Graph(1);
    Graph g(2 * k + 1);
    int center = 2 * k;
    for (int i = 0; i < k; ++i) {
        g.add_edge(2 * i, 2 * i + 1);
        g.add_edge(center, 2 * i);
        g.add_edge(center, 2 * i + 1);
    }
    return g;
}

Graph join_apex(const Graph& h) {
    int n = h.vertex_count();
    Graph g(n + 1);
    for (auto [u, v] : h.edges()) g.add_edge(u, v);
    for (int v = 0; v < n; ++v) g.add_edge(n, v);
    return g;
}

Graph disjoint_union(std::span<const Graph> gs) {
    int n = 0;
    for (const auto& g : gs) n += g.vertex_count();
    Graph out(n);
    int off = 0;
    for (const auto& g : gs) {
        for (auto [u, v] : g.edges()) out.add_edge(off + u, off + v);
        off += g.vertex_count();
    }
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int v : g.neighbors(u))
                if (comp[v] == -1) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* old_to_new) {
    std::vector<int> map(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) map[verts[i]] = i;
    Graph out(static_cast<int>(verts.size()));
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        for (int w : g.neighbors(verts[i]))
            if (map[w] > i) out.add_edge(i, map[w]);
    if (old_to_new) *old_to_new = std::move(map);
    return out;
}

Graph remove_vertex(const Graph& g, int v, std::vector<int>* old_to_new) {
    std::vector<int> keep;
    keep.reserve(g.vertex_count() - 1);
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep, old_to_new);
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& edges) {
    std::vector<Edge> drop;
    drop.reserve(edges.size());
    for (auto [u, v] : edges) drop.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(drop.begin(), drop.end());
    Graph out(g.vertex_count());
    for (auto e : g.edges())
        if (!std::binary_search(drop.begin(), drop.end(), e))
            out.add_edge(e.first, e.second);
    return out;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            for (int w : g.neighbors(v))
                if (w > v && g.has_edge(u, w)) out.push_back({u, v, w});
        }
    return out;
}

int t_count(const Graph& g) { return static_cast<int>(triangles(g).size()); }

std::vector<int> dominating_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == g.vertex_count() - 1) out.push_back(v);
    return out;
}

}  // namespace edc

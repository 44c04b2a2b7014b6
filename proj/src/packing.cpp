#include "edc/packing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace edc {

namespace {

using AdjMask = std::vector<uint64_t>;  // adjacency rows, n <= 64

AdjMask to_mask(const Graph& g) {
    AdjMask a(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        a[u] |= 1ull << v;
        a[v] |= 1ull << u;
    }
    return a;
}

int mask_edge_count(const AdjMask& a) {
    int s = 0;
    for (uint64_t row : a) s += std::popcount(row);
    return s / 2;
}

// Remove degree <= 1 vertices iteratively; they lie on no cycle.
void trim(AdjMask& a) {
    bool again = true;
    while (again) {
        again = false;
        for (size_t v = 0; v < a.size(); ++v) {
            if (a[v] != 0 && std::popcount(a[v]) <= 1) {
                for (size_t u = 0; u < a.size(); ++u) a[u] &= ~(1ull << v);
                a[v] = 0;
                again = true;
            }
        }
    }
}

// min(floor(m/3), m - n + c); isolated vertices cancel out of m - n + c.
int mask_bound(const AdjMask& a) {
    int m = mask_edge_count(a);
    if (m == 0) return 0;
    int n = static_cast<int>(a.size());
    uint64_t seen = 0;
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (seen & (1ull << s)) continue;
        ++c;
        uint64_t comp = 1ull << s, frontier = 1ull << s;
        while (frontier) {
            uint64_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier & (1ull << v)) next |= a[v];
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
    }
    return std::min(m / 3, m - n + c);
}

void remove_cycle_edges(AdjMask& a, const std::vector<int>& cyc) {
    for (size_t i = 0; i < cyc.size(); ++i) {
        int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
        a[u] &= ~(1ull << v);
        a[v] &= ~(1ull << u);
    }
}

// All simple cycles through the edge (v,u), as sequences starting v,u,...;
// sorted shortest-first, then lexicographically.
std::vector<std::vector<int>> cycles_through_edge(const AdjMask& a, int v, int u) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<int>> out;
    std::vector<int> path{v, u};
    uint64_t visited = (1ull << v) | (1ull << u);
    auto dfs = [&](auto&& self, int cur) -> void {
        for (int w = 0; w < n; ++w) {
            if (!(a[cur] & (1ull << w))) continue;
            if (w == v) {
                if (path.size() >= 3) out.push_back(path);
                continue;
            }
            if (visited & (1ull << w)) continue;
            visited |= 1ull << w;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            visited &= ~(1ull << w);
        }
    };
    dfs(dfs, u);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

struct PackingSolver {
    long long budget;
    int stop_at;
    long long nodes = 0;
    bool aborted = false;
    bool stopped = false;
    std::vector<std::vector<int>> current, best;

    void search(AdjMask adj) {
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (current.size() > best.size()) best = current;
        if (static_cast<int>(best.size()) >= stop_at) {
            stopped = true;
            return;
        }
        trim(adj);
        int ub = mask_bound(adj);
        if (ub == 0) return;
        if (current.size() + ub <= best.size()) return;

        // minimum-degree vertex (degree >= 2 after trimming), lowest label
        int v = -1, dmin = 1 << 30;
        for (size_t i = 0; i < adj.size(); ++i) {
            int d = std::popcount(adj[i]);
            if (d >= 2 && d < dmin) {
                dmin = d;
                v = static_cast<int>(i);
            }
        }
        int u = std::countr_zero(adj[v]);

        for (const auto& cyc : cycles_through_edge(adj, v, u)) {
            AdjMask child = adj;
            remove_cycle_edges(child, cyc);
            current.push_back(cyc);
            search(std::move(child));
            current.pop_back();
            if (aborted || stopped) return;
        }
        // discard the edge
        AdjMask child = std::move(adj);
        child[v] &= ~(1ull << u);
        child[u] &= ~(1ull << v);
        search(std::move(child));
    }
};

}  // namespace

bool verify_packing(const Graph& g, const CyclePacking& p) {
    std::set<Edge> used;
    for (const auto& cyc : p.cycles) {
        if (cyc.size() < 3) return false;
        std::set<int> vs(cyc.begin(), cyc.end());
        if (vs.size() != cyc.size()) return false;
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a < 0 || a >= g.vertex_count() || !g.has_edge(a, b)) return false;
            Edge e{std::min(a, b), std::max(a, b)};
            if (!used.insert(e).second) return false;
        }
    }
    return true;
}

int phi_upper_bound(const Graph& g) {
    int m = g.edge_count();
    int cyclomatic = m - g.vertex_count() + static_cast<int>(components(g).size());
    return std::min(m / 3, cyclomatic);
}

PackingResult max_cycle_packing(const Graph& g, long long budget, int stop_at) {
    if (g.vertex_count() > 64)
        throw std::invalid_argument("max_cycle_packing: n <= 64 required");
    PackingSolver solver{budget, stop_at};
    solver.search(to_mask(g));
    PackingResult res;
    res.phi = static_cast<int>(solver.best.size());
    res.witness.cycles = std::move(solver.best);
    res.proven_optimal = !solver.aborted && !solver.stopped;
    res.nodes_explored = solver.nodes;
    return res;
}

std::vector<std::vector<int>> all_cycles(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<bool> visited(n, false);
    for (int s = 0; s < n; ++s) {
        path = {s};
        visited[s] = true;
        auto dfs = [&](auto&& self, int cur) -> void {
            for (int w : g.neighbors(cur)) {
                if (w == s) {
                    // close only in one direction to avoid the mirror copy
                    if (path.size() >= 3 && path[1] < path.back()) {
                        out.push_back(path);
                        if (out.size() > 10000)
                            throw std::invalid_argument(
                                "all_cycles: cycle count guard exceeded");
                    }
                    continue;
                }
                if (w < s || visited[w]) continue;
                visited[w] = true;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                visited[w] = false;
            }
        };
        dfs(dfs, s);
        visited[s] = false;
    }
    return out;
}

int brute_force_phi(const Graph& g) {
    if (g.edge_count() > 64)
        throw std::invalid_argument("brute_force_phi: at most 64 edges");
    auto cycles = all_cycles(g);
    auto edge_list = g.edges();
    std::map<Edge, int> edge_id;
    for (size_t i = 0; i < edge_list.size(); ++i) edge_id[edge_list[i]] = static_cast<int>(i);

    std::vector<uint64_t> cyc_mask(cycles.size(), 0);
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = 0; j < cycles[i].size(); ++j) {
            int a = cycles[i][j], b = cycles[i][(j + 1) % cycles[i].size()];
            cyc_mask[i] |= 1ull << edge_id[{std::min(a, b), std::max(a, b)}];
        }
    std::vector<std::vector<int>> by_edge(edge_list.size());
    for (size_t i = 0; i < cycles.size(); ++i)
        for (int e = 0; e < static_cast<int>(edge_list.size()); ++e)
            if (cyc_mask[i] & (1ull << e)) by_edge[e].push_back(static_cast<int>(i));

    const bool memoize = g.edge_count() <= 30;
    std::unordered_map<uint64_t, int> memo;
    auto rec = [&](auto&& self, uint64_t mask) -> int {
        if (mask == 0) return 0;
        if (memoize) {
            auto it = memo.find(mask);
            if (it != memo.end()) return it->second;
        }
        int e = std::countr_zero(mask);
        int ans = self(self, mask & ~(1ull << e));  // edge e unused
        for (int ci : by_edge[e])
            if ((cyc_mask[ci] & mask) == cyc_mask[ci])
                ans = std::max(ans, 1 + self(self, mask & ~cyc_mask[ci]));
        if (memoize) memo[mask] = ans;
        return ans;
    };
    return rec(rec, g.edge_count() == 64 ? ~0ull : (1ull << g.edge_count()) - 1);
}

CyclePacking apex_tree_packing(const ApexTreeInstance& inst) {
    const Graph& tree = inst.tree;
    const int n = tree.vertex_count();
    if (n == 0 || tree.edge_count() != n - 1 || !is_connected(tree))
        throw std::invalid_argument("apex_tree_packing: not a tree");
    std::set<int> s(inst.apex_neighbors.begin(), inst.apex_neighbors.end());
    if (s.size() != inst.apex_neighbors.size())
        throw std::invalid_argument("apex_tree_packing: duplicate apex neighbors");
    if (s.empty() || *s.begin() < 0 || *s.rbegin() >= n)
        throw std::invalid_argument("apex_tree_packing: bad apex neighbor set");
    const int apex = n;

    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : tree.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> alive(n, true);

    auto erase_vertex = [&](int v) {
        for (int w : adj[v]) adj[w].erase(v);
        adj[v].clear();
        alive[v] = false;
    };
    auto prune = [&]() {
        // shrink to the minimal subtree spanning s
        bool again = true;
        while (again) {
            again = false;
            for (int v = 0; v < n; ++v)
                if (alive[v] && adj[v].size() <= 1 && !s.count(v)) {
                    erase_vertex(v);
                    again = true;
                }
        }
    };
    // walk from a leaf through degree-2 vertices not in s; returns the path
    // ending at the first s-vertex of degree <= 2, or empty if a branching
    // vertex interrupts
    auto leaf_run = [&](int leaf) -> std::vector<int> {
        std::vector<int> p{leaf};
        int prev = -1, cur = leaf;
        while (true) {
            int nxt = -1;
            for (int w : adj[cur])
                if (w != prev) {
                    nxt = w;
                    break;
                }
            if (nxt == -1) return {};  // isolated s-vertex, nothing to close
            p.push_back(nxt);
            if (s.count(nxt)) return adj[nxt].size() <= 2 ? p : std::vector<int>{};
            if (adj[nxt].size() != 2) return {};
            prev = cur;
            cur = nxt;
        }
    };

    CyclePacking packing;
    while (true) {
        prune();
        if (s.size() < 2) break;

        // Case 1: a pendant path with both endpoints in s, internal vertices
        // outside s; shortest first
        std::vector<int> best_path;
        for (int leaf = 0; leaf < n; ++leaf) {
            if (!alive[leaf] || adj[leaf].size() != 1) continue;
            auto p = leaf_run(leaf);
            if (!p.empty() && (best_path.empty() || p.size() < best_path.size()))
                best_path = std::move(p);
        }
        if (!best_path.empty()) {
            std::vector<int> cyc{apex};
            cyc.insert(cyc.end(), best_path.begin(), best_path.end());
            packing.cycles.push_back(std::move(cyc));
            s.erase(best_path.front());
            s.erase(best_path.back());
            for (int v : best_path) erase_vertex(v);
            continue;
        }

        // Cases 2-3: two full leaf runs hanging off one branching vertex
        // (the branching vertex is kept)
        std::map<int, std::vector<std::vector<int>>> runs;  // branch vertex -> runs
        for (int leaf = 0; leaf < n; ++leaf) {
            if (!alive[leaf] || adj[leaf].size() != 1) continue;
            std::vector<int> p{leaf};
            int prev = -1, cur = leaf;
            while (adj[cur].size() <= 2) {
                int nxt = -1;
                for (int w : adj[cur])
                    if (w != prev) nxt = w;
                if (nxt == -1) break;
                p.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            if (adj[cur].size() >= 3) runs[cur].push_back(std::move(p));
        }
        int branch = -1;
        for (const auto& [v, rs] : runs)
            if (rs.size() >= 2) {
                branch = v;
                break;
            }
        if (branch == -1)
            throw std::logic_error("apex_tree_packing: no extraction found");
        auto rs = runs[branch];
        std::sort(rs.begin(), rs.end(), [](const auto& x, const auto& y) {
            return x.size() != y.size() ? x.size() < y.size() : x < y;
        });
        const auto& p1 = rs[0];
        const auto& p2 = rs[1];
        // cycle apex - u1 ... branch ... u2 - apex
        std::vector<int> cyc{apex};
        cyc.insert(cyc.end(), p1.begin(), p1.end());  // leaf1 .. branch
        for (auto it = p2.rbegin() + 1; it != p2.rend(); ++it) cyc.push_back(*it);
        packing.cycles.push_back(std::move(cyc));
        s.erase(p1.front());
        s.erase(p2.front());
        for (size_t i = 0; i + 1 < p1.size(); ++i) erase_vertex(p1[i]);
        for (size_t i = 0; i + 1 < p2.size(); ++i) erase_vertex(p2[i]);
    }
    return packing;
}

PeelResult greedy_triangle_peel(const Graph& g) {
    PeelResult res;
    res.residual = g;
    while (true) {
        auto tris = triangles(res.residual);
        if (tris.empty()) break;
        auto [a, b, c] = tris.front();  // lexicographically smallest
        res.peeled.push_back({a, b, c});
        res.residual = remove_edges(res.residual, {{a, b}, {a, c}, {b, c}});
        ++res.q;
    }
    return res;
}

bool triangle_incidence_forest(const std::vector<std::array<int, 3>>& tris) {
    std::set<Edge> used;
    std::map<int, int> occurrences;
    for (const auto& t : tris) {
        std::array<Edge, 3> es{{{std::min(t[0], t[1]), std::max(t[0], t[1])},
                                {std::min(t[0], t[2]), std::max(t[0], t[2])},
                                {std::min(t[1], t[2]), std::max(t[1], t[2])}}};
        for (auto e : es)
            if (!used.insert(e).second)
                throw std::invalid_argument(
                    "triangle_incidence_forest: triangles share an edge");
        for (int v : t) ++occurrences[v];
    }
    // bipartite graph on triangles and multiply-covered vertices; acyclic
    // iff edges < nodes per connected component, checked with union-find
    std::map<int, int> vertex_node;
    int nodes = static_cast<int>(tris.size());
    for (const auto& [v, cnt] : occurrences)
        if (cnt >= 2) vertex_node[v] = nodes++;
    std::vector<int> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < tris.size(); ++i)
        for (int v : tris[i]) {
            auto it = vertex_node.find(v);
            if (it == vertex_node.end()) continue;
            int a = find(static_cast<int>(i)), b = find(it->second);
            if (a == b) return false;  // cycle in the incidence graph
            parent[a] = b;
        }
    return true;
}

}  // namespace edc

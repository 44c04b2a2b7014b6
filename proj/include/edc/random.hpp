#ifndef EDC_RANDOM_HPP
#define EDC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "edc/graph.hpp"

namespace edc {

inline constexpr uint64_t kDefaultSeed = 0xC0FFEE;

using Rng = std::mt19937_64;

inline Graph random_graph(Rng& rng, int n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// uniform labeled tree via a random Pruefer sequence
inline Graph random_tree(Rng& rng, int n) {
    Graph g(n);
    if (n <= 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    std::vector<int> deg(n, 1);
    for (int& x : pruefer) {
        x = pick(rng);
        ++deg[x];
    }
    std::vector<bool> used(n, false);
    for (int code : pruefer) {
        int leaf = 0;
        while (deg[leaf] != 1 || used[leaf]) ++leaf;
        g.add_edge(leaf, code);
        used[leaf] = true;
        --deg[code];
    }
    int a = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1 && !used[v]) {
            if (a == -1)
                a = v;
            else
                g.add_edge(a, v);
        }
    return g;
}

// random triangle-cactus with t triangles: grow by attaching triangles at
// uniformly chosen existing vertices
inline Graph random_triangle_cactus(Rng& rng, int t) {
    Graph g = complete(3);
    for (int s = 2; s <= t; ++s) {
        int n = g.vertex_count();
        int at = std::uniform_int_distribution<int>(0, n - 1)(rng);
        Graph h(n + 2);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        h.add_edge(at, n);
        h.add_edge(at, n + 1);
        h.add_edge(n, n + 1);
        g = std::move(h);
    }
    return g;
}

}  // namespace edc

#endif

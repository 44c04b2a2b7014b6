#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edc/blocks.hpp"
#include "edc/canonical.hpp"
#include "edc/graph.hpp"
#include "edc/planarity.hpp"
#include "edc/random.hpp"
#include "edc/search.hpp"
#include "oracles.hpp"

using namespace edc;

TEST_CASE("named verdicts") {
    CHECK_FALSE(is_planar(complete(5)).planar);
    CHECK(is_planar(join_apex(friendship(3))).planar);
    CHECK_FALSE(is_planar(join_apex(complete_bipartite(2, 5))).planar);
    CHECK(is_planar(Graph(0)).planar);
    CHECK(is_planar(Graph(4)).planar);
}

TEST_CASE("outerplanarity") {
    CHECK(is_outerplanar(cycle(5)));
    CHECK_FALSE(is_outerplanar(complete(4)));
    CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
    CHECK(is_outerplanar(path(6)));
}

TEST_CASE("planar implies the Euler edge bound") {
    for (int n = 3; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n))
            if (is_planar(g).planar) CHECK(g.edge_count() <= 3 * n - 6);
}

TEST_CASE("subgraphs of planar graphs stay planar") {
    Rng rng(kDefaultSeed + 3);
    int checked = 0;
    while (checked < 30) {
        Graph g = random_graph(rng, 8, 0.4);
        if (!is_planar(g).planar) continue;
        ++checked;
        auto es = g.edges();
        if (es.empty()) continue;
        std::uniform_int_distribution<size_t> pick(0, es.size() - 1);
        Graph h = remove_edges(g, {es[pick(rng)]});
        CHECK(is_planar(h).planar);
    }
}

TEST_CASE("apex over triangle-cactus unions is planar") {
    Rng rng(kDefaultSeed + 4);
    std::uniform_int_distribution<int> tri(1, 4), parts(1, 3), pad(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Graph> comps;
        int p = parts(rng);
        for (int i = 0; i < p; ++i) comps.push_back(random_triangle_cactus(rng, tri(rng)));
        comps.push_back(Graph(pad(rng)));
        Graph h = disjoint_union(std::span<const Graph>(comps));
        CHECK(is_planar(join_apex(h)).planar);
    }
}

TEST_CASE("agreement with the rotation-system oracle on n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n))
            CHECK(is_planar(g).planar == test_oracle::planar_by_rotations(g));
}

namespace {

// suppress degree-2 vertices of the obstruction subgraph, keeping branch
// vertices; the result must be K5 or K3,3
Graph suppress_degree_two(const Graph& g) {
    std::vector<int> branch;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) branch.push_back(v);
    std::vector<int> idx(g.vertex_count(), -1);
    for (size_t i = 0; i < branch.size(); ++i) idx[branch[i]] = static_cast<int>(i);
    Graph out(static_cast<int>(branch.size()));
    for (int b : branch)
        for (int w : g.neighbors(b)) {
            // walk through the degree-2 chain to the far branch vertex
            int prev = b, cur = w;
            while (idx[cur] == -1) {
                int nxt = -1;
                for (int x : g.neighbors(cur))
                    if (x != prev) nxt = x;
                prev = cur;
                cur = nxt;
            }
            if (idx[b] < idx[cur]) out.add_edge(idx[b], idx[cur]);
        }
    return out;
}

}  // namespace

TEST_CASE("obstruction extraction yields a Kuratowski subdivision") {
    for (const Graph& g : {complete(5), complete_bipartite(3, 3),
                           join_apex(complete_bipartite(2, 5))}) {
        auto verdict = is_planar(g, true);
        REQUIRE_FALSE(verdict.planar);
        REQUIRE(verdict.obstruction.has_value());
        Graph sub(g.vertex_count());
        for (auto [u, v] : *verdict.obstruction) sub.add_edge(u, v);
        Graph core = suppress_degree_two(sub);
        bool k5 = isomorphic(core, complete(5));
        bool k33 = isomorphic(core, complete_bipartite(3, 3));
        CHECK((k5 || k33));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "edc/blocks.hpp"
#include "edc/canonical.hpp"
#include "edc/graph.hpp"
#include "edc/graph6.hpp"
#include "edc/random.hpp"
#include "oracles.hpp"

using namespace edc;

TEST_CASE("from_edges basics") {
    auto tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.edge_count() == 3);
    CHECK(tri.vertex_count() == 3);

    auto dedup = Graph::from_edges(4, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(dedup.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("adjacency stays sorted and symmetric") {
    Rng rng(kDefaultSeed);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 9, 0.4);
        int degsum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& nb = g.neighbors(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (int w : nb) CHECK(g.has_edge(w, v));
            degsum += g.degree(v);
        }
        CHECK(degsum == 2 * g.edge_count());  // handshake
    }
}

TEST_CASE("join_apex") {
    CHECK(join_apex(complete(3)) == complete(4));

    // apex over F_{k-1} plus isolated vertices has n + 3k - 4 edges
    for (int k = 2; k <= 4; ++k) {
        int n = 2 * k + 4;
        Graph h = disjoint_union({friendship(k - 1), Graph(n - 2 * k)});
        Graph g = join_apex(h);
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == n + 3 * k - 4);
        CHECK(g.degree(n - 1) == n - 1);  // apex is the highest label
    }

    CHECK(isomorphic(join_apex(Graph(5)), star(5)));
}

TEST_CASE("friendship graphs") {
    CHECK(friendship(0).vertex_count() == 1);
    CHECK(friendship(0).edge_count() == 0);
    CHECK(isomorphic(friendship(1), complete(3)));
    auto f3 = friendship(3);
    CHECK(f3.vertex_count() == 7);
    CHECK(f3.edge_count() == 9);
    CHECK(f3.max_degree() == 6);
    for (int k = 1; k <= 4; ++k) {
        auto fk = friendship(k);
        CHECK(fk.vertex_count() == 2 * k + 1);
        CHECK(fk.edge_count() == 3 * k);
        CHECK(t_count(fk) == k);
        auto cert = is_triangle_cactus(fk);
        REQUIRE(cert.has_value());
        CHECK(cert->triangle_count == k);
    }
}

TEST_CASE("standard constructions") {
    CHECK(complete(5).edge_count() == 10);
    CHECK(complete_bipartite(2, 5).edge_count() == 10);  // K_{2,2k-3}, k=4
    auto u = disjoint_union({friendship(1), Graph(4)});
    CHECK(u.vertex_count() == 7);
    CHECK(u.edge_count() == 3);
    CHECK(path(4).edge_count() == 3);
    CHECK(cycle(5).edge_count() == 5);
}

TEST_CASE("components") {
    CHECK(components(disjoint_union({complete(3), Graph(1)})).size() == 2);
    CHECK(components(cycle(5)).size() == 1);
    CHECK(components(Graph(3)).size() == 3);
}

TEST_CASE("blocks") {
    auto f2 = friendship(2);
    auto dec = blocks(f2);
    CHECK(dec.blocks.size() == 2);
    CHECK(dec.cut_vertices.size() == 1);
    CHECK(dec.cut_vertices[0] == 4);  // the shared center

    CHECK(blocks(complete(4)).blocks.size() == 1);
    CHECK(blocks(complete(4)).cut_vertices.empty());

    auto p = blocks(path(4));
    CHECK(p.blocks.size() == 3);
    CHECK(p.cut_vertices == std::vector<int>{1, 2});
}

TEST_CASE("block edge sets partition E") {
    Rng rng(kDefaultSeed + 1);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 8, 0.35);
        auto dec = blocks(g);
        std::set<Edge> all;
        size_t total = 0;
        for (const auto& b : dec.blocks) {
            total += b.size();
            all.insert(b.begin(), b.end());
        }
        CHECK(total == all.size());  // pairwise disjoint
        CHECK(static_cast<int>(total) == g.edge_count());
    }
}

TEST_CASE("is_triangle_cactus") {
    auto cert = is_triangle_cactus(friendship(3));
    REQUIRE(cert.has_value());
    CHECK(cert->triangle_count == 3);
    CHECK(friendship(3).vertex_count() == 2 * cert->triangle_count + 1);

    CHECK_FALSE(is_triangle_cactus(complete(4)).has_value());
    CHECK_FALSE(is_triangle_cactus(path(2)).has_value());
    CHECK_THROWS_AS(is_triangle_cactus(disjoint_union({complete(3), Graph(1)})),
                    std::invalid_argument);
}

TEST_CASE("triangles and dominating vertices") {
    CHECK(triangles(complete(4)).size() == 4);
    CHECK(t_count(cycle(5)) == 0);
    for (int k = 2; k <= 5; ++k) CHECK(t_count(friendship(k - 1)) == k - 1);

    CHECK(dominating_vertices(star(5)) == std::vector<int>{0});
    CHECK(dominating_vertices(cycle(4)).empty());
    CHECK(dominating_vertices(complete(4)).size() == 4);
}

TEST_CASE("induced subgraph relabels densely") {
    Graph g = friendship(2);
    std::vector<int> map;
    Graph h = remove_vertex(g, 4, &map);  // drop the center
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 2);
    CHECK(map[4] == -1);
    CHECK(map[0] == 0);
}

TEST_CASE("canonical form basics") {
    Graph c4 = cycle(4);
    Graph c4_relabel = Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}, {1, 2}});
    CHECK(canonical_bytes(c4) == canonical_bytes(c4_relabel));
    CHECK(canonical_bytes(c4) != canonical_bytes(path(4)));
    CHECK_THROWS_AS(canonical_form(Graph(17)), std::invalid_argument);
}

TEST_CASE("canonical form counts 11 graphs on 4 vertices") {
    // all 2^6 edge subsets of K4
    auto all_edges = complete(4).edges();
    std::set<std::string> canon;
    std::vector<Graph> reps;
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<Edge> es;
        for (int i = 0; i < 6; ++i)
            if (mask & (1u << i)) es.push_back(all_edges[i]);
        Graph g = Graph::from_edges(4, es);
        canon.insert(canonical_bytes(g));
        bool fresh = true;
        for (const auto& r : reps) fresh = fresh && !test_oracle::brute_force_isomorphic(r, g);
        if (fresh) reps.push_back(g);
    }
    CHECK(canon.size() == 11);
    CHECK(reps.size() == 11);  // brute-force permutation oracle agrees
}

TEST_CASE("canonical form agrees with brute-force isomorphism on n <= 5") {
    auto graphs = test_oracle::all_labeled_dedup(5);
    for (size_t i = 0; i < graphs.size(); ++i)
        for (size_t j = i; j < graphs.size(); ++j) {
            bool canon_eq = canonical_bytes(graphs[i]) == canonical_bytes(graphs[j]);
            bool brute_eq = test_oracle::brute_force_isomorphic(graphs[i], graphs[j]);
            CHECK(canon_eq == brute_eq);
        }
}

TEST_CASE("graph6 hand-packed values") {
    CHECK(graph6_encode(complete(3)) == "Bw");
    CHECK(graph6_decode("B?") == Graph(3));
    CHECK(graph6_decode("Bw") == complete(3));
}

TEST_CASE("graph6 error handling") {
    CHECK_THROWS_AS(graph6_decode("B"), std::invalid_argument);    // truncated
    CHECK_THROWS_AS(graph6_decode("B\x01"), std::invalid_argument);  // < 63
    CHECK_THROWS_AS(graph6_decode("Bww"), std::invalid_argument);  // trailing
}

TEST_CASE("graph6 round-trip") {
    Rng rng(kDefaultSeed + 2);
    std::uniform_int_distribution<int> size(1, 20);
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = random_graph(rng, size(rng), 0.4);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    // extended size field
    for (int n : {63, 64, 70}) {
        Graph g = random_graph(rng, n, 0.1);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("dot export") {
    auto dot = to_dot(complete(3));
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}

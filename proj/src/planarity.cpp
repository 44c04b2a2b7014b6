#include "edc/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace edc {

namespace {

// edge_index is required by the Kuratowski-subgraph extraction path
using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.vertex_count());
    int idx = 0;
    for (auto [u, v] : g.edges())
        boost::add_edge(u, v, boost::property<boost::edge_index_t, int>(idx++), bg);
    return bg;
}

}  // namespace

PlanarityVerdict is_planar(const Graph& g, bool extract_obstruction) {
    const int n = g.vertex_count();
    // Euler fast-reject; also keeps the Kuratowski path off the common case
    if (n >= 3 && g.edge_count() > 3 * n - 6 && !extract_obstruction)
        return {false, std::nullopt};

    BoostGraph bg = to_boost(g);
    if (!extract_obstruction) {
        bool ok = boost::boyer_myrvold_planarity_test(bg);
        return {ok, std::nullopt};
    }
    std::vector<boost::graph_traits<BoostGraph>::edge_descriptor> kuratowski;
    bool ok = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::kuratowski_subgraph =
            std::back_inserter(kuratowski));
    PlanarityVerdict verdict{ok, std::nullopt};
    if (!ok) {
        std::vector<Edge> obs;
        obs.reserve(kuratowski.size());
        for (auto e : kuratowski) {
            int u = static_cast<int>(boost::source(e, bg));
            int v = static_cast<int>(boost::target(e, bg));
            obs.emplace_back(std::min(u, v), std::max(u, v));
        }
        verdict.obstruction = std::move(obs);
    }
    return verdict;
}

bool is_outerplanar(const Graph& g) { return is_planar(join_apex(g)).planar; }

}  // namespace edc

#ifndef EDC_SEARCH_HPP
#define EDC_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edc/graph.hpp"

namespace edc {

struct EnumerationFilter {
    bool require_planar = false;
    bool require_dominating_vertex = false;
    std::optional<int> phi_max;
    std::optional<int> edge_count;
};

// Deterministic shard split: graphs are assigned by the leading bits of
// their canonical adjacency bit string.
struct ShardSpec {
    int shards = 1;
    int shard = 0;
};

struct SearchReport {
    nlohmann::json parameters;
    int max_edges_found = -1;
    std::vector<std::string> extremal_graphs;  // graph6
    bool matched_characterization = false;
    std::vector<std::string> counterexamples;  // graph6
    int threshold = -1;     // threshold_g / threshold_h only
    bool cap_bound = false;  // the simple/planar edge cap bound the search
    nlohmann::json runtime_stats;

    nlohmann::json to_json() const;
};

// One representative per isomorphism class on n vertices, generated by
// vertex extension with canonical-form dedup. Unrestricted enumeration is
// capped at n <= 8; with require_dominating_vertex the cap is n <= 10 (only
// H on n-1 vertices is enumerated and joined). threads > 1 switches the
// per-level candidate evaluation to the OpenMP path.
std::vector<Graph> enumerate_graphs(int n, const EnumerationFilter& filter = {},
                                    int threads = 1, const ShardSpec& shard = {});

// All non-isomorphic trees on n vertices (n <= 12).
std::vector<Graph> enumerate_trees(int n);

// All unions of triangle-cacti with t triangles total, padded with isolated
// vertices to exactly `vertices` vertices; t = 0 yields the edgeless graph.
std::vector<Graph> cactus_union_family(int t, int vertices);

SearchReport verify_theorem_1_1(int n, int k, int threads = 1,
                                const ShardSpec& shard = {});
SearchReport verify_theorem_1_2_family(int n, int k);
SearchReport claim_3_2_bound_check(int n, int k, int threads = 1,
                                   const ShardSpec& shard = {});
SearchReport threshold_g(int n, int k, int threads = 1);
SearchReport threshold_h(int n, int k, int threads = 1);

// Associative, commutative merge of reports from a sharded run.
SearchReport merge_reports(const SearchReport& a, const SearchReport& b);

}  // namespace edc

#endif

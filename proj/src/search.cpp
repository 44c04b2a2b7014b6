#include "edc/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "edc/blocks.hpp"
#include "edc/cactus.hpp"
#include "edc/canonical.hpp"
#include "edc/graph6.hpp"
#include "edc/packing.hpp"
#include "edc/planarity.hpp"
#include "edc/spectral.hpp"

namespace edc {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

int shard_of(const std::string& canon_bytes, int shards) {
    if (shards <= 1) return 0;
    int bits = std::bit_width(static_cast<unsigned>(shards - 1));
    unsigned char b =
        canon_bytes.size() > 2 ? static_cast<unsigned char>(canon_bytes[2]) : 0;
    return (b >> (8 - bits)) % shards;
}

// Canonical bytes for a batch of graphs. The serial path is the reference;
// the OpenMP path must produce the identical vector.
std::vector<std::string> canon_batch_serial(const std::vector<Graph>& gs, int cap) {
    std::vector<std::string> out(gs.size());
    for (size_t i = 0; i < gs.size(); ++i) out[i] = canonical_bytes(gs[i], cap);
    return out;
}

std::vector<std::string> canon_batch_parallel(const std::vector<Graph>& gs, int cap,
                                              int threads) {
    std::vector<std::string> out(gs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
    for (size_t i = 0; i < gs.size(); ++i) out[i] = canonical_bytes(gs[i], cap);
    return out;
}

std::vector<std::string> canon_batch(const std::vector<Graph>& gs, int cap,
                                     int threads) {
    return threads > 1 ? canon_batch_parallel(gs, cap, threads)
                       : canon_batch_serial(gs, cap);
}

// One representative per isomorphism class, by adding vertex L with every
// neighborhood subset to each (L-1)-vertex class representative.
std::vector<Graph> all_graphs_up_to_iso(int n, std::optional<int> max_edges,
                                        int threads) {
    std::vector<Graph> level{Graph(1)};
    for (int L = 2; L <= n; ++L) {
        std::vector<Graph> candidates;
        for (const auto& parent : level) {
            for (unsigned mask = 0; mask < (1u << (L - 1)); ++mask) {
                if (max_edges &&
                    parent.edge_count() + std::popcount(mask) > *max_edges)
                    continue;
                Graph g(L);
                for (auto [u, v] : parent.edges()) g.add_edge(u, v);
                for (int v = 0; v < L - 1; ++v)
                    if (mask & (1u << v)) g.add_edge(v, L - 1);
                candidates.push_back(std::move(g));
            }
        }
        auto keys = canon_batch(candidates, L, threads);
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (size_t i = 0; i < candidates.size(); ++i)
            if (seen.insert(keys[i]).second) next.push_back(std::move(candidates[i]));
        level = std::move(next);
    }
    return level;
}

// phi(g) <= bound, decided exactly; throws if the solver budget runs out
// rather than guessing.
bool phi_at_most(const Graph& g, int bound) {
    auto res = max_cycle_packing(g, kDefaultPackingBudget, bound + 1);
    if (res.phi > bound) return false;
    if (!res.proven_optimal)
        throw std::runtime_error("phi filter: branch-and-bound budget exhausted");
    return true;
}

bool passes_filter(const Graph& g, const EnumerationFilter& f) {
    if (f.edge_count && g.edge_count() != *f.edge_count) return false;
    if (f.require_dominating_vertex && dominating_vertices(g).empty()) return false;
    if (f.require_planar && !is_planar(g).planar) return false;
    if (f.phi_max && !phi_at_most(g, *f.phi_max)) return false;
    return true;
}

std::vector<char> filter_batch_serial(const std::vector<Graph>& gs,
                                      const EnumerationFilter& f) {
    std::vector<char> keep(gs.size());
    for (size_t i = 0; i < gs.size(); ++i) keep[i] = passes_filter(gs[i], f);
    return keep;
}

std::vector<char> filter_batch_parallel(const std::vector<Graph>& gs,
                                        const EnumerationFilter& f, int threads) {
    std::vector<char> keep(gs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#endif
    for (size_t i = 0; i < gs.size(); ++i) keep[i] = passes_filter(gs[i], f);
    return keep;
}

std::vector<char> filter_batch(const std::vector<Graph>& gs,
                               const EnumerationFilter& f, int threads) {
    return threads > 1 ? filter_batch_parallel(gs, f, threads)
                       : filter_batch_serial(gs, f);
}

bool is_cactus_union(const Graph& h) {
    for (const auto& comp : components(h)) {
        if (comp.size() == 1) continue;
        if (!is_triangle_cactus(induced_subgraph(h, comp))) return false;
    }
    return true;
}

// G matches the equality class: some dominating vertex u has G-u with
// t = k-1 triangles, every non-trivial component a triangle-cactus.
bool matches_equality_class(const Graph& g, int k) {
    for (int u : dominating_vertices(g)) {
        Graph h = remove_vertex(g, u);
        if (t_count(h) == k - 1 && is_cactus_union(h)) return true;
    }
    return false;
}

}  // namespace

nlohmann::json SearchReport::to_json() const {
    return {{"parameters", parameters},
            {"max_edges_found", max_edges_found},
            {"extremal_graphs", extremal_graphs},
            {"matched_characterization", matched_characterization},
            {"counterexamples", counterexamples},
            {"threshold", threshold},
            {"cap_bound", cap_bound},
            {"runtime_stats", runtime_stats}};
}

std::vector<Graph> enumerate_graphs(int n, const EnumerationFilter& filter,
                                    int threads, const ShardSpec& shard) {
    if (shard.shards < 1 || shard.shard < 0 || shard.shard >= shard.shards)
        throw std::invalid_argument("enumerate_graphs: bad shard spec");
    std::vector<Graph> base;
    if (filter.require_dominating_vertex) {
        if (n < 1 || n > 10)
            throw std::invalid_argument(
                "enumerate_graphs: n <= 10 with a dominating vertex");
        for (auto& h : all_graphs_up_to_iso(n - 1, std::nullopt, threads))
            base.push_back(join_apex(h));
        // joins of non-isomorphic H may coincide; dedup by canonical form
        auto keys = canon_batch(base, n, threads);
        std::vector<Graph> uniq;
        std::set<std::string> seen;
        for (size_t i = 0; i < base.size(); ++i)
            if (seen.insert(keys[i]).second &&
                shard_of(keys[i], shard.shards) == shard.shard)
                uniq.push_back(std::move(base[i]));
        base = std::move(uniq);
    } else {
        if (n < 1 || n > 8)
            throw std::invalid_argument("enumerate_graphs: n <= 8 unrestricted");
        base = all_graphs_up_to_iso(n, filter.edge_count, threads);
        if (shard.shards > 1) {
            auto keys = canon_batch(base, n, threads);
            std::vector<Graph> kept;
            for (size_t i = 0; i < base.size(); ++i)
                if (shard_of(keys[i], shard.shards) == shard.shard)
                    kept.push_back(std::move(base[i]));
            base = std::move(kept);
        }
    }
    auto keep = filter_batch(base, filter, threads);
    std::vector<Graph> out;
    for (size_t i = 0; i < base.size(); ++i)
        if (keep[i]) out.push_back(std::move(base[i]));
    return out;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("enumerate_trees: 1 <= n <= 12");
    std::vector<Graph> level{Graph(1)};
    for (int L = 2; L <= n; ++L) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const auto& parent : level)
            for (int v = 0; v < L - 1; ++v) {
                Graph g(L);
                for (auto [a, b] : parent.edges()) g.add_edge(a, b);
                g.add_edge(v, L - 1);
                auto key = canonical_bytes(g, L);
                if (seen.insert(std::move(key)).second) next.push_back(std::move(g));
            }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> cactus_union_family(int t, int vertices) {
    if (t < 0 || vertices < 0) throw std::invalid_argument("cactus_union_family");
    std::vector<std::vector<Graph>> shapes(t + 1);
    for (int s = 1; s <= t; ++s) shapes[s] = enumerate_triangle_cacti(s);

    std::vector<Graph> out;
    std::set<std::vector<std::string>> seen;  // multiset of component keys
    std::vector<std::pair<int, int>> parts;   // (triangle count, shape index)

    auto emit = [&]() {
        int used = 0;
        for (auto [s, i] : parts) used += 2 * s + 1;
        if (used > vertices) return;
        std::vector<std::string> key;
        std::vector<Graph> comps;
        for (auto [s, i] : parts) {
            comps.push_back(shapes[s][i]);
            key.push_back(canonical_bytes(comps.back(), 2 * s + 1));
        }
        std::sort(key.begin(), key.end());
        if (!seen.insert(std::move(key)).second) return;
        comps.push_back(Graph(vertices - used));
        out.push_back(disjoint_union(std::span<const Graph>(comps)));
    };

    // non-increasing partition of t; for equal part sizes the shape index is
    // non-increasing too, so each multiset of shapes appears once
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (int s = std::min(remaining, max_part); s >= 1; --s) {
            int start = static_cast<int>(shapes[s].size()) - 1;
            if (!parts.empty() && parts.back().first == s)
                start = parts.back().second;
            for (int i = start; i >= 0; --i) {
                parts.emplace_back(s, i);
                self(self, remaining - s, s);
                parts.pop_back();
            }
        }
    };
    rec(rec, t, std::max(t, 1));
    return out;
}

SearchReport verify_theorem_1_1(int n, int k, int threads, const ShardSpec& shard) {
    if (k < 2 || k > 3) throw std::invalid_argument("verify_theorem_1_1: 2 <= k <= 3");
    if (n < 2 * k + 1 || n > 10)
        throw std::invalid_argument("verify_theorem_1_1: 2k+1 <= n <= 10");
    auto t0 = Clock::now();

    EnumerationFilter f;
    f.require_planar = true;
    f.require_dominating_vertex = true;
    f.phi_max = k - 1;
    auto universe = enumerate_graphs(n, f, threads, shard);

    SearchReport rep;
    rep.parameters = {{"op", "verify_theorem_1_1"}, {"n", n}, {"k", k},
                      {"shards", shard.shards},     {"shard", shard.shard}};
    // predicted maximum; a shard is judged against this fixed target so that
    // shard-level verdicts stay sound even when every extremal class happens
    // to live in a different shard
    const int target = n + 3 * k - 4;
    int best = -1;
    for (const auto& g : universe) best = std::max(best, g.edge_count());
    rep.max_edges_found = best;

    std::set<std::string> extremal_keys;
    for (const auto& g : universe) {
        if (g.edge_count() > target) {
            rep.counterexamples.push_back(graph6_encode(g));
            continue;
        }
        if (g.edge_count() == target) {
            rep.extremal_graphs.push_back(graph6_encode(g));
            extremal_keys.insert(canonical_bytes(g, n));
            if (!matches_equality_class(g, k))
                rep.counterexamples.push_back(graph6_encode(g));
        }
    }

    // expected equality class: K1 joined to a union of triangle-cacti with
    // k-1 triangles plus isolated vertices
    std::set<std::string> expected_keys;
    int missing = 0;
    for (const auto& h : cactus_union_family(k - 1, n - 1)) {
        auto key = canonical_bytes(join_apex(h), n);
        if (shard_of(key, shard.shards) != shard.shard) continue;
        if (!extremal_keys.count(key)) ++missing;
        expected_keys.insert(std::move(key));
    }
    rep.matched_characterization = missing == 0 && rep.counterexamples.empty() &&
                                   extremal_keys == expected_keys;
    rep.runtime_stats = {{"ms", ms_since(t0)},
                         {"universe_size", universe.size()},
                         {"expected_equality_classes", expected_keys.size()},
                         {"missing_expected", missing}};
    return rep;
}

SearchReport claim_3_2_bound_check(int n, int k, int threads, const ShardSpec& shard) {
    if (k < 2 || k > 3) throw std::invalid_argument("claim_3_2_bound_check: 2 <= k <= 3");
    if (n < 2 * k + 1 || n > 10)
        throw std::invalid_argument("claim_3_2_bound_check: 2k+1 <= n <= 10");
    auto t0 = Clock::now();

    EnumerationFilter f;
    f.require_planar = true;
    f.require_dominating_vertex = true;
    f.phi_max = k - 1;
    auto universe = enumerate_graphs(n, f, threads, shard);

    SearchReport rep;
    rep.parameters = {{"op", "claim_3_2_bound_check"}, {"n", n}, {"k", k},
                      {"shards", shard.shards},        {"shard", shard.shard}};
    int best = -1;
    int equality_cases = 0;
    for (const auto& g : universe) {
        // with require_dominating_vertex the apex is vertex n-1 by construction
        Graph h = remove_vertex(g, n - 1);
        best = std::max(best, h.edge_count());
        if (h.edge_count() > 3 * k - 3) {
            rep.counterexamples.push_back(graph6_encode(g));
            continue;
        }
        if (h.edge_count() == 3 * k - 3) {
            ++equality_cases;
            rep.extremal_graphs.push_back(graph6_encode(g));
            auto peel = greedy_triangle_peel(h);
            bool ok = peel.q == k - 1 && peel.residual.edge_count() == 0 &&
                      triangle_incidence_forest(peel.peeled);
            if (!ok) rep.counterexamples.push_back(graph6_encode(g));
        }
    }
    rep.max_edges_found = best;
    rep.matched_characterization = rep.counterexamples.empty();
    rep.runtime_stats = {{"ms", ms_since(t0)},
                         {"universe_size", universe.size()},
                         {"equality_cases", equality_cases}};
    return rep;
}

SearchReport verify_theorem_1_2_family(int n, int k) {
    if (k < 1 || k > 6) throw std::invalid_argument("verify_theorem_1_2_family: k <= 6");
    if (n < 2 * k || n > 200)
        throw std::invalid_argument("verify_theorem_1_2_family: 2k <= n <= 200");
    auto t0 = Clock::now();

    SearchReport rep;
    rep.parameters = {{"op", "verify_theorem_1_2_family"}, {"n", n}, {"k", k}};
    auto family = cactus_union_family(k - 1, n - 1);

    auto is_friendship_padding = [&](const Graph& h) {
        int nontrivial = 0;
        bool ok = true;
        for (const auto& comp : components(h)) {
            if (comp.size() == 1) continue;
            ++nontrivial;
            ok = ok && isomorphic(induced_subgraph(h, comp), friendship(k - 1),
                                  2 * k - 1);
        }
        return k == 1 ? nontrivial == 0 : (nontrivial == 1 && ok);
    };

    double best_rho = -1.0, second_rho = -1.0;
    int best_idx = -1;
    nlohmann::json rhos = nlohmann::json::array();
    for (size_t i = 0; i < family.size(); ++i) {
        double rho = spectral_radius(join_apex(family[i])).rho;
        rhos.push_back(rho);
        if (rho > best_rho) {
            second_rho = best_rho;
            best_rho = rho;
            best_idx = static_cast<int>(i);
        } else {
            second_rho = std::max(second_rho, rho);
        }
    }
    double margin = family.size() > 1 ? best_rho - second_rho : -1.0;
    bool argmax_ok = best_idx >= 0 && is_friendship_padding(family[best_idx]);
    rep.matched_characterization =
        argmax_ok && (family.size() == 1 || margin > 1e-6);
    rep.extremal_graphs.push_back(graph6_encode(join_apex(family[best_idx])));
    if (!argmax_ok)
        rep.counterexamples.push_back(graph6_encode(join_apex(family[best_idx])));
    rep.max_edges_found = join_apex(family[best_idx]).edge_count();
    rep.runtime_stats = {{"ms", ms_since(t0)},
                         {"candidates", family.size()},
                         {"rho_max", best_rho},
                         {"margin", margin},
                         {"rhos", rhos}};
    return rep;
}

namespace {

SearchReport threshold_common(int n, int k, int threads, bool planar_only) {
    if (k < 2 || k > 3) throw std::invalid_argument("threshold: 2 <= k <= 3");
    if (n < 3 || n > 8) throw std::invalid_argument("threshold: 3 <= n <= 8");
    auto t0 = Clock::now();

    EnumerationFilter f;
    f.require_planar = planar_only;
    f.phi_max = k - 1;
    auto universe = enumerate_graphs(n, f, threads);

    SearchReport rep;
    rep.parameters = {{"op", planar_only ? "threshold_h" : "threshold_g"},
                      {"n", n},
                      {"k", k}};
    int best_c = INT_MIN;
    for (const auto& g : universe) best_c = std::max(best_c, g.edge_count() - n);
    bool verified = true;
    for (const auto& g : universe)
        if (g.edge_count() - n == best_c) {
            rep.extremal_graphs.push_back(graph6_encode(g));
            verified = verified && brute_force_phi(g) <= k - 1;
        }
    rep.max_edges_found = best_c + n;
    rep.threshold = best_c + 1;
    int edge_cap = planar_only ? std::min(3 * n - 6, n * (n - 1) / 2)
                               : n * (n - 1) / 2;
    rep.cap_bound = best_c + n == edge_cap;
    rep.matched_characterization = verified;
    rep.runtime_stats = {{"ms", ms_since(t0)},
                         {"phi_le_k_minus_1_classes", universe.size()},
                         {"edge_cap", edge_cap}};
    return rep;
}

}  // namespace

SearchReport threshold_g(int n, int k, int threads) {
    return threshold_common(n, k, threads, false);
}

SearchReport threshold_h(int n, int k, int threads) {
    return threshold_common(n, k, threads, true);
}

SearchReport merge_reports(const SearchReport& a, const SearchReport& b) {
    SearchReport out;
    out.parameters = a.parameters;
    out.parameters["shards"] = nullptr;
    out.parameters["shard"] = nullptr;
    out.max_edges_found = std::max(a.max_edges_found, b.max_edges_found);
    auto take = [&](const SearchReport& r) {
        if (r.max_edges_found == out.max_edges_found)
            out.extremal_graphs.insert(out.extremal_graphs.end(),
                                       r.extremal_graphs.begin(),
                                       r.extremal_graphs.end());
        out.counterexamples.insert(out.counterexamples.end(),
                                   r.counterexamples.begin(),
                                   r.counterexamples.end());
    };
    take(a);
    take(b);
    std::sort(out.extremal_graphs.begin(), out.extremal_graphs.end());
    out.extremal_graphs.erase(
        std::unique(out.extremal_graphs.begin(), out.extremal_graphs.end()),
        out.extremal_graphs.end());
    std::sort(out.counterexamples.begin(), out.counterexamples.end());
    out.counterexamples.erase(
        std::unique(out.counterexamples.begin(), out.counterexamples.end()),
        out.counterexamples.end());
    out.matched_characterization =
        a.matched_characterization && b.matched_characterization;
    out.threshold = std::max(a.threshold, b.threshold);
    out.cap_bound = a.cap_bound || b.cap_bound;
    out.runtime_stats = {{"merged", true}};
    return out;
}

}  // namespace edc

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edc/blocks.hpp"
#include "edc/cactus.hpp"
#include "edc/canonical.hpp"
#include "edc/graph.hpp"
#include "edc/graph6.hpp"
#include "edc/packing.hpp"
#include "edc/planarity.hpp"
#include "edc/random.hpp"
#include "edc/search.hpp"
#include "edc/spectral.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GraphInput {
    std::string inline_graph6;
    std::string path;  // "-" for stdin

    std::vector<std::string> lines() const {
        if (!inline_graph6.empty()) return {inline_graph6};
        std::vector<std::string> out;
        auto read = [&](std::istream& in) {
            std::string line;
            while (std::getline(in, line))
                if (!line.empty()) out.push_back(line);
        };
        if (path == "-") {
            read(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw std::invalid_argument("cannot open input file: " + path);
            read(in);
        }
        return out;
    }
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
    auto* a = cmd->add_option("--graph6", in.inline_graph6, "inline graph6 string");
    auto* b = cmd->add_option("--input", in.path, "file of graph6 lines ('-' = stdin)");
    a->excludes(b);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json cycles_to_json(const edc::CyclePacking& p) {
    json out = json::array();
    for (const auto& c : p.cycles) out.push_back(c);
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-disjoint cycle packing toolkit"};
    app.require_subcommand(1);

    uint64_t seed = edc::kDefaultSeed;
    app.add_option("--seed", seed, "RNG seed for randomized generators")
        ->capture_default_str();

    // phi
    auto* phi = app.add_subcommand("phi", "maximum edge-disjoint cycle packing");
    GraphInput phi_in;
    add_graph_input(phi, phi_in);
    long long budget = edc::kDefaultPackingBudget;
    bool phi_witness = false, phi_brute = false;
    phi->add_option("--budget", budget, "branch-and-bound node budget")
        ->capture_default_str();
    phi->add_flag("--witness", phi_witness, "include the cycle witness");
    phi->add_flag("--brute-force", phi_brute, "also run the brute-force oracle");

    // planar
    auto* planar = app.add_subcommand("planar", "planarity / outerplanarity");
    GraphInput planar_in;
    add_graph_input(planar, planar_in);
    bool want_outer = false, want_obstruction = false;
    planar->add_flag("--outerplanar", want_outer, "also test outerplanarity");
    planar->add_flag("--obstruction", want_obstruction,
                     "extract a Kuratowski obstruction when non-planar");

    // spectral
    auto* spectral = app.add_subcommand("spectral", "adjacency spectral radius");
    GraphInput spectral_in;
    add_graph_input(spectral, spectral_in);
    double tol = 1e-10;
    bool want_exact = false;
    spectral->add_option("--tol", tol, "convergence tolerance")->capture_default_str();
    spectral->add_flag("--exact", want_exact,
                       "include the exact characteristic-polynomial value (n <= 12)");

    // construct
    auto* construct = app.add_subcommand("construct", "build a named family member");
    std::string family, emit_format = "graph6";
    int c_k = 0, c_n = 0, c_a = 0, c_b = 0, c_t = 0;
    construct->add_option("--family", family,
                          "friendship | complete | path | cycle | star | "
                          "complete-bipartite | cactus | extremal | counterexample")
        ->required();
    construct->add_option("--k", c_k, "parameter k");
    construct->add_option("--n", c_n, "vertex count");
    construct->add_option("--a", c_a, "bipartition side a");
    construct->add_option("--b", c_b, "bipartition side b");
    construct->add_option("--t", c_t, "triangle count (random cactus)");
    construct->add_option("--emit", emit_format, "graph6 | dot | json")
        ->capture_default_str();

    // peel
    auto* peel = app.add_subcommand("peel", "greedy triangle peeling");
    GraphInput peel_in;
    add_graph_input(peel, peel_in);

    // apex-pack
    auto* apexpack =
        app.add_subcommand("apex-pack", "constructive apex-tree cycle packing");
    GraphInput apex_in;
    add_graph_input(apexpack, apex_in);
    std::string neighbor_list;
    apexpack
        ->add_option("--neighbors", neighbor_list,
                     "comma-separated apex neighbor set S in the tree")
        ->required();

    // verify-t11 / verify-t12 / threshold
    int vn = 0, vk = 0, threads = 1, shards = 1, shard = 0;
    auto add_verify_opts = [&](CLI::App* cmd, bool sharded) {
        cmd->add_option("--n", vn, "order n")->required();
        cmd->add_option("--k", vk, "parameter k")->required();
        if (sharded) {
            cmd->add_option("--threads", threads, "worker threads");
            cmd->add_option("--shards", shards, "total shards");
            cmd->add_option("--shard", shard, "this shard index");
        }
    };
    auto* t11 = app.add_subcommand("verify-t11", "edge-extremal verification");
    add_verify_opts(t11, true);
    auto* t12 = app.add_subcommand(
        "verify-t12", "spectral argmax over the triangle-cactus family");
    add_verify_opts(t12, false);
    auto* thresh =
        app.add_subcommand("threshold", "empirical local cycle threshold at fixed n");
    add_verify_opts(thresh, true);
    bool thresh_planar = false;
    thresh->add_flag("--planar", thresh_planar, "restrict to planar graphs");
    auto* c32 = app.add_subcommand("claim-32", "dominated-subgraph edge bound check");
    add_verify_opts(c32, true);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "isomorph-free enumeration");
    int e_n = 0;
    std::optional<int> e_edges, e_phi_max;
    bool e_planar = false, e_dominating = false, e_count_only = false;
    enumerate->add_option("--n", e_n, "vertex count")->required();
    enumerate->add_option("--edges", e_edges, "exact edge count");
    enumerate->add_option("--phi-max", e_phi_max, "keep graphs with phi <= value");
    enumerate->add_flag("--planar", e_planar, "keep planar graphs");
    enumerate->add_flag("--dominating", e_dominating,
                        "keep graphs with a dominating vertex");
    enumerate->add_flag("--count", e_count_only, "emit only the class count");
    enumerate->add_option("--threads", threads, "worker threads");
    enumerate->add_option("--shards", shards, "total shards");
    enumerate->add_option("--shard", shard, "this shard index");

    // let global options (--seed) appear after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*phi) {
            for (const auto& line : phi_in.lines()) {
                auto g = edc::graph6_decode(line);
                auto res = edc::max_cycle_packing(g, budget);
                json out{{"phi", res.phi},
                         {"proven_optimal", res.proven_optimal},
                         {"nodes_explored", res.nodes_explored}};
                if (phi_witness) out["witness"] = cycles_to_json(res.witness);
                if (phi_brute) out["phi_brute_force"] = edc::brute_force_phi(g);
                emit(out);
                if (!res.proven_optimal) return kExitBudget;
            }
        } else if (*planar) {
            for (const auto& line : planar_in.lines()) {
                auto g = edc::graph6_decode(line);
                auto v = edc::is_planar(g, want_obstruction);
                json out{{"planar", v.planar}};
                if (want_outer) out["outerplanar"] = edc::is_outerplanar(g);
                if (v.obstruction) {
                    json obs = json::array();
                    for (auto [a, b] : *v.obstruction) obs.push_back({a, b});
                    out["obstruction"] = obs;
                }
                emit(out);
            }
        } else if (*spectral) {
            for (const auto& line : spectral_in.lines()) {
                auto g = edc::graph6_decode(line);
                auto r = edc::spectral_radius(g, tol);
                json out{{"rho", r.rho},
                         {"iterations", r.iterations},
                         {"residual", r.residual}};
                if (want_exact) out["rho_exact"] = edc::spectral_radius_exact_small(g);
                emit(out);
            }
        } else if (*construct) {
            edc::Graph g;
            if (family == "friendship") {
                g = edc::friendship(c_k);
            } else if (family == "complete") {
                g = edc::complete(c_n);
            } else if (family == "path") {
                g = edc::path(c_n);
            } else if (family == "cycle") {
                g = edc::cycle(c_n);
            } else if (family == "star") {
                g = edc::star(c_n - 1);
            } else if (family == "complete-bipartite") {
                g = edc::complete_bipartite(c_a, c_b);
            } else if (family == "cactus") {
                edc::Rng rng(seed);
                g = edc::random_triangle_cactus(rng, c_t);
            } else if (family == "extremal") {
                // K1 joined to F_{k-1} plus n-2k isolated vertices
                if (c_n < 2 * c_k) throw std::invalid_argument("need n >= 2k");
                g = edc::join_apex(edc::disjoint_union(
                    {edc::friendship(c_k - 1), edc::Graph(c_n - 2 * c_k)}));
            } else if (family == "counterexample") {
                // K1 joined to K_{2,2k-3} plus n-2k isolated vertices
                if (c_k < 2 || c_n < 2 * c_k) throw std::invalid_argument("need k >= 2, n >= 2k");
                g = edc::join_apex(edc::disjoint_union(
                    {edc::complete_bipartite(2, 2 * c_k - 3),
                     edc::Graph(c_n - 2 * c_k)}));
            } else {
                throw std::invalid_argument("unknown family: " + family);
            }
            if (emit_format == "graph6") {
                std::cout << edc::graph6_encode(g) << "\n";
            } else if (emit_format == "dot") {
                std::cout << edc::to_dot(g);
            } else if (emit_format == "json") {
                emit(json{{"n", g.vertex_count()},
                          {"edges", g.edges()},
                          {"graph6", edc::graph6_encode(g)}});
            } else {
                throw std::invalid_argument("unknown emit format: " + emit_format);
            }
        } else if (*peel) {
            for (const auto& line : peel_in.lines()) {
                auto g = edc::graph6_decode(line);
                auto r = edc::greedy_triangle_peel(g);
                json peeled = json::array();
                for (const auto& t : r.peeled) peeled.push_back({t[0], t[1], t[2]});
                emit(json{{"q", r.q},
                          {"peeled", peeled},
                          {"residual_graph6", edc::graph6_encode(r.residual)},
                          {"residual_triangles", edc::t_count(r.residual)}});
            }
        } else if (*apexpack) {
            auto lines = apex_in.lines();
            if (lines.size() != 1)
                throw std::invalid_argument("apex-pack expects exactly one tree");
            edc::ApexTreeInstance inst{edc::graph6_decode(lines[0]),
                                       parse_int_list(neighbor_list)};
            auto packing = edc::apex_tree_packing(inst);
            emit(json{{"size", packing.size()}, {"cycles", cycles_to_json(packing)}});
        } else if (*t11) {
            auto rep = edc::verify_theorem_1_1(vn, vk, threads, {shards, shard});
            json out = rep.to_json();
            out["max_edges"] = rep.max_edges_found;
            out["matched"] = rep.matched_characterization;
            emit(out);
            if (!rep.matched_characterization && shards == 1)
                return kExitVerificationFailed;
        } else if (*t12) {
            auto rep = edc::verify_theorem_1_2_family(vn, vk);
            json out = rep.to_json();
            out["matched"] = rep.matched_characterization;
            emit(out);
            if (!rep.matched_characterization) return kExitVerificationFailed;
        } else if (*c32) {
            auto rep = edc::claim_3_2_bound_check(vn, vk, threads, {shards, shard});
            json out = rep.to_json();
            out["matched"] = rep.matched_characterization;
            emit(out);
            if (!rep.matched_characterization && shards == 1)
                return kExitVerificationFailed;
        } else if (*thresh) {
            auto rep = thresh_planar ? edc::threshold_h(vn, vk, threads)
                                     : edc::threshold_g(vn, vk, threads);
            emit(rep.to_json());
            if (!rep.matched_characterization) return kExitVerificationFailed;
        } else if (*enumerate) {
            edc::EnumerationFilter f;
            f.require_planar = e_planar;
            f.require_dominating_vertex = e_dominating;
            f.phi_max = e_phi_max;
            f.edge_count = e_edges;
            auto gs = edc::enumerate_graphs(e_n, f, threads, {shards, shard});
            if (e_count_only) {
                emit(json{{"count", gs.size()}});
            } else {
                for (const auto& g : gs) std::cout << edc::graph6_encode(g) << "\n";
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    }
    return kExitOk;
}

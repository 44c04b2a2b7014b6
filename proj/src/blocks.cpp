#include "edc/blocks.hpp"

#include <algorithm>
#include <set>

namespace edc {

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<Edge> stack;
    BlockDecomposition out;
    std::set<int> cuts;
    int counter = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), num(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

    void pop_block(const Edge& until) {
        std::vector<Edge> block;
        while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == until) break;
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    }

    void dfs(int u, int parent) {
        num[u] = low[u] = counter++;
        int children = 0;
        for (int v : g.neighbors(u)) {
            if (v == parent) {
                parent = -1;  // skip the tree edge once
                continue;
            }
            Edge e{std::min(u, v), std::max(u, v)};
            if (num[v] == -1) {
                stack.push_back(e);
                ++children;
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    if (num[u] > 0 || children > 1) cuts.insert(u);
                    pop_block(e);
                }
            } else if (num[v] < num[u]) {
                stack.push_back(e);
                low[u] = std::min(low[u], num[v]);
            }
        }
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder f(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (f.num[v] == -1) f.dfs(v, -1);
    f.out.cut_vertices.assign(f.cuts.begin(), f.cuts.end());
    return f.out;
}

std::optional<TriangleCactusCertificate> is_triangle_cactus(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("is_triangle_cactus: disconnected input");
    if (g.vertex_count() <= 1) return TriangleCactusCertificate{};  // t = 0, v = 1
    auto dec = blocks(g);
    TriangleCactusCertificate cert;
    for (const auto& block : dec.blocks) {
        if (block.size() != 3) return std::nullopt;
        std::set<int> vs;
        for (auto [u, v] : block) {
            vs.insert(u);
            vs.insert(v);
        }
        if (vs.size() != 3) return std::nullopt;
        auto it = vs.begin();
        std::array<int, 3> tri{*it, *std::next(it), *std::next(it, 2)};
        cert.blocks.push_back(tri);
    }
    cert.triangle_count = static_cast<int>(cert.blocks.size());
    return cert;
}

}  // namespace edc

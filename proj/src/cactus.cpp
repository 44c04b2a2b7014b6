#include "edc/cactus.hpp"

#include <set>
#include <stdexcept>

#include "edc/canonical.hpp"

namespace edc {

std::vector<Graph> enumerate_triangle_cacti(int t) {
    if (t < 1) throw std::invalid_argument("enumerate_triangle_cacti: t >= 1");
    if (t > 8) throw std::invalid_argument("enumerate_triangle_cacti: t cap is 8");
    std::vector<Graph> level{complete(3)};
    for (int s = 2; s <= t; ++s) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const auto& g : level) {
            int n = g.vertex_count();
            for (int v = 0; v < n; ++v) {
                // attach a fresh triangle at v
                Graph h(n + 2);
                for (auto [a, b] : g.edges()) h.add_edge(a, b);
                h.add_edge(v, n);
                h.add_edge(v, n + 1);
                h.add_edge(n, n + 1);
                auto key = canonical_bytes(h, n + 2);
                if (seen.insert(std::move(key)).second) next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace edc

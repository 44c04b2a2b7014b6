#include "edc/canonical.hpp"

#include <algorithm>
#include <map>

namespace edc {

namespace {

// Refine colors until stable: a vertex's new color is determined by its old
// color together with the multiset of its neighbors' old colors.
void refine(const Graph& g, std::vector<int>& color) {
    const int n = g.vertex_count();
    int ncolors = 1 + (n ? *std::max_element(color.begin(), color.end()) : 0);
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.reserve(g.degree(v) + 1);
            s.push_back(color[v]);
            for (int w : g.neighbors(v)) s.push_back(color[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        auto order = sig;
        std::sort(order.begin(), order.end());
        std::vector<int> next(n);
        int c = -1;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || order[i].first != order[i - 1].first) ++c;
            next[order[i].second] = c;
        }
        if (c + 1 == ncolors) {
            color = std::move(next);
            return;
        }
        ncolors = c + 1;
        color = std::move(next);
    }
}

struct Canonizer {
    const Graph& g;
    int n;
    std::string best;
    std::vector<int> best_perm;  // best_perm[v] = canonical position of v

    std::string bytes_for(const std::vector<int>& pos) const {
        // pos[v] = canonical position; emit upper triangle of relabeled graph
        std::vector<int> at(n);
        for (int v = 0; v < n; ++v) at[pos[v]] = v;
        std::string out;
        out.push_back(static_cast<char>(n & 0xff));
        out.push_back(static_cast<char>((n >> 8) & 0xff));
        unsigned cur = 0;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                cur = (cur << 1) | (g.has_edge(at[i], at[j]) ? 1u : 0u);
                if (++bit == 8) {
                    out.push_back(static_cast<char>(cur));
                    bit = 0;
                    cur = 0;
                }
            }
        if (bit > 0) out.push_back(static_cast<char>(cur << (8 - bit)));
        return out;
    }

    void visit(std::vector<int> color) {
        refine(g, color);
        // first smallest non-singleton cell
        std::map<int, std::vector<int>> cells;
        for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
        int target = -1;
        size_t target_size = 0;
        for (const auto& [c, vs] : cells)
            if (vs.size() > 1 && (target == -1 || vs.size() < target_size)) {
                target = c;
                target_size = vs.size();
            }
        if (target == -1) {
            // discrete: color is a permutation
            std::string b = bytes_for(color);
            if (best.empty() || b < best) {
                best = std::move(b);
                best_perm = color;
            }
            return;
        }
        // Twins u, v (identical neighborhoods up to each other) are swapped by
        // an automorphism fixing everything else, so their branches yield the
        // same canonical bytes: branch on one representative per twin class.
        auto twins = [&](int u, int v) {
            std::vector<int> nu = g.neighbors(u), nv = g.neighbors(v);
            std::erase(nu, v);
            std::erase(nv, u);
            return nu == nv;
        };
        std::vector<int> reps;
        for (int v : cells[target]) {
            bool dup = false;
            for (int u : reps)
                if (twins(u, v)) {
                    dup = true;
                    break;
                }
            if (!dup) reps.push_back(v);
        }
        int fresh = static_cast<int>(cells.size());
        for (int v : reps) {
            std::vector<int> branch = color;
            branch[v] = fresh;
            visit(std::move(branch));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int cap) {
    if (g.vertex_count() > cap)
        throw std::invalid_argument("canonical_form: vertex cap exceeded");
    Canonizer c{g, g.vertex_count(), {}, {}};
    c.visit(std::vector<int>(g.vertex_count(), 0));
    if (c.best.empty()) {  // n == 0
        c.best.push_back(0);
        c.best.push_back(0);
    }
    return {std::move(c.best_perm), std::move(c.best)};
}

bool isomorphic(const Graph& a, const Graph& b, int cap) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_bytes(a, cap) == canonical_bytes(b, cap);
}

}  // namespace edc

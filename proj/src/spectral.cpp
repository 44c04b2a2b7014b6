#include "edc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace edc {

namespace {

struct ComponentResult {
    double rho;
    std::vector<double> vec;  // indexed by local labels
    long long iterations;
    double residual;
};

ComponentResult power_iterate(const Graph& g, const std::vector<int>& verts,
                              double tol, long long max_iter, long long& used) {
    const int m = static_cast<int>(verts.size());
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < m; ++i) local[verts[i]] = i;
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int w : g.neighbors(verts[i])) adj[i].push_back(local[w]);

    std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(m)));
    std::vector<double> y(m);
    double mu_prev = -1.0;
    long long it = 0;
    while (true) {
        if (used + it >= max_iter)
            throw std::runtime_error("spectral_radius: iteration cap exceeded");
        ++it;
        // y = (A + I) x
        for (int i = 0; i < m; ++i) {
            double s = x[i];
            for (int w : adj[i]) s += x[w];
            y[i] = s;
        }
        double mu = 0.0;
        for (int i = 0; i < m; ++i) mu += x[i] * y[i];
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        for (double& v : y) v /= norm;
        x.swap(y);
        if (std::abs(mu - mu_prev) < tol) {
            double rho = mu - 1.0;
            double res = 0.0;
            for (int i = 0; i < m; ++i) {
                double s = 0.0;
                for (int w : adj[i]) s += x[w];
                res = std::max(res, std::abs(s - rho * x[i]));
            }
            if (res < tol) {
                used += it;
                return {rho, x, it, res};
            }
        }
        mu_prev = mu;
    }
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol, long long max_iter) {
    if (tol <= 0) throw std::invalid_argument("spectral_radius: tol > 0 required");
    SpectralResult out;
    out.perron.assign(g.vertex_count(), 0.0);
    long long used = 0;
    ComponentResult best{-1.0, {}, 0, 0.0};
    std::vector<int> best_verts;
    for (const auto& comp : components(g)) {
        auto r = power_iterate(g, comp, tol, max_iter, used);
        out.iterations += r.iterations;
        if (r.rho > best.rho) {
            best = std::move(r);
            best_verts = comp;
        }
    }
    out.rho = std::max(0.0, best.rho);
    out.residual = best.residual;
    for (size_t i = 0; i < best_verts.size(); ++i) out.perron[best_verts[i]] = best.vec[i];
    return out;
}

namespace {

// largest adjacency eigenvalue of one connected graph; by Perron-Frobenius it
// is a simple root of the characteristic polynomial, so Newton from the right
// converges quadratically onto it at full precision
double exact_rho_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() == 0) return 0.0;

    // exact characteristic polynomial det(xI - A) by Faddeev-LeVerrier
    std::vector<long long> a(n * n, 0);
    for (auto [u, v] : g.edges()) a[u * n + v] = a[v * n + u] = 1;
    std::vector<long long> m(n * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;  // M_0 = I
    std::vector<long long> coeff(n + 1, 0);
    coeff[0] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<long long> am(n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                __int128 s = 0;
                for (int l = 0; l < n; ++l)
                    s += static_cast<__int128>(a[i * n + l]) * m[l * n + j];
                am[i * n + j] = static_cast<long long>(s);
            }
        __int128 tr = 0;
        for (int i = 0; i < n; ++i) tr += am[i * n + i];
        long long ck = static_cast<long long>(-tr / k);
        coeff[k] = ck;
        m = std::move(am);
        for (int i = 0; i < n; ++i) m[i * n + i] += ck;
    }

    auto eval = [&](long double x, long double& dp) {
        long double p = coeff[0], d = 0.0L;
        for (int k = 1; k <= n; ++k) {
            d = d * x + p;
            p = p * x + static_cast<long double>(coeff[k]);
        }
        dp = d;
        return p;
    };
    // all eigenvalues are real, so Newton from the right of the largest root
    // decreases monotonically onto it
    long double x = static_cast<long double>(n);
    for (int it = 0; it < 20000; ++it) {
        long double dp;
        long double p = eval(x, dp);
        if (dp == 0.0L) break;
        long double step = p / dp;
        x -= step;
        if (step <= 0.0L || step < 1e-16L * std::max(1.0L, x)) break;
    }
    return static_cast<double>(x);
}

}  // namespace

double spectral_radius_exact_small(const Graph& g) {
    if (g.vertex_count() > 12)
        throw std::invalid_argument("spectral_radius_exact_small: n <= 12 required");
    double best = 0.0;
    for (const auto& comp : components(g))
        best = std::max(best, exact_rho_connected(induced_subgraph(g, comp)));
    return best;
}

double swap_gain(const Graph& g, const std::vector<double>& x,
                 const std::vector<Edge>& removed, const std::vector<Edge>& added) {
    const int n = g.vertex_count();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("swap_gain: vector size mismatch");
    std::set<Edge> rem;
    for (auto [u, v] : removed) {
        if (u < 0 || v < 0 || u >= n || v >= n || !g.has_edge(u, v))
            throw std::invalid_argument("swap_gain: removed edge not in graph");
        rem.insert({std::min(u, v), std::max(u, v)});
    }
    double gain = 0.0;
    for (auto [u, v] : added) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("swap_gain: bad added edge");
        Edge e{std::min(u, v), std::max(u, v)};
        if (g.has_edge(u, v) && !rem.count(e))
            throw std::invalid_argument("swap_gain: added edge already present");
        gain += x[u] * x[v];
    }
    for (auto [u, v] : rem) gain -= x[u] * x[v];
    return 2.0 * gain;
}

}  // namespace edc

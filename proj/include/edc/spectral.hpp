#ifndef EDC_SPECTRAL_HPP
#define EDC_SPECTRAL_HPP

#include <vector>

#include "edc/graph.hpp"

namespace edc {

struct SpectralResult {
    double rho = 0.0;
    // unit Perron vector of the dominant component, zeros elsewhere
    std::vector<double> perron;
    long long iterations = 0;
    double residual = 0.0;  // ||A x - rho x||_inf
};

// Power iteration on A+I per connected component (the shift removes the
// bipartite period-2 mode); rho is the maximum over components.
// Throws std::runtime_error if the iteration cap is hit without convergence.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-10,
                               long long max_iter = 1'000'000);

// Largest root of the exact integer characteristic polynomial (Faddeev-
// LeVerrier), located by damped Newton from above; n <= 12.
double spectral_radius_exact_small(const Graph& g);

// 2 * (sum_{uv in added} x_u x_v - sum_{uv in removed} x_u x_v): the Rayleigh
// lower bound on the change of rho under an edge rewiring.
double swap_gain(const Graph& g, const std::vector<double>& x,
                 const std::vector<Edge>& removed, const std::vector<Edge>& added);

}  // namespace edc

#endif

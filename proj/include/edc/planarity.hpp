#ifndef EDC_PLANARITY_HPP
#define EDC_PLANARITY_HPP

#include <optional>
#include <vector>

#include "edc/graph.hpp"

namespace edc {

struct PlanarityVerdict {
    bool planar = false;
    // K5/K3,3-subdivision edges; filled only when non-planar and extraction
    // was requested
    std::optional<std::vector<Edge>> obstruction;
};

PlanarityVerdict is_planar(const Graph& g, bool extract_obstruction = false);

// G is outerplanar iff K_1 joined to G is planar.
bool is_outerplanar(const Graph& g);

}  // namespace edc

#endif

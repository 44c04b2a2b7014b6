#ifndef EDC_CACTUS_HPP
#define EDC_CACTUS_HPP

#include <vector>

#include "edc/graph.hpp"

namespace edc {

// All pairwise non-isomorphic connected triangle-cacti with exactly t
// triangles (so 2t+1 vertices). t >= 1; capped at t <= 8.
std::vector<Graph> enumerate_triangle_cacti(int t);

}  // namespace edc

#endif

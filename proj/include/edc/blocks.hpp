#ifndef EDC_BLOCKS_HPP
#define EDC_BLOCKS_HPP

#include <array>
#include <optional>
#include <vector>

#include "edc/graph.hpp"

namespace edc {

struct BlockDecomposition {
    // each block is an edge set; together they partition E(G)
    std::vector<std::vector<Edge>> blocks;
    std::vector<int> cut_vertices;
};

// Depth-first lowpoint method. Isolated vertices form no block.
BlockDecomposition blocks(const Graph& g);

struct TriangleCactusCertificate {
    std::vector<std::array<int, 3>> blocks;  // each a triangle, vertex-sorted
    int triangle_count = 0;
};

// Certificate iff g is connected and every block is a triangle.
// Throws std::invalid_argument on disconnected input.
std::optional<TriangleCactusCertificate> is_triangle_cactus(const Graph& g);

}  // namespace edc

#endif

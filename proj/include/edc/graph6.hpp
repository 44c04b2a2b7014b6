#ifndef EDC_GRAPH6_HPP
#define EDC_GRAPH6_HPP

#include <string>
#include <string_view>

#include "edc/graph.hpp"

namespace edc {

// Standard graph6: size field (n+63 for n <= 62, extended forms above),
// then the upper triangle in column-major order, 6 bits per byte, each +63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);  // throws std::invalid_argument

std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace edc

#endif

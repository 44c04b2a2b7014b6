#ifndef EDC_CANONICAL_HPP
#define EDC_CANONICAL_HPP

#include <string>
#include <vector>

#include "edc/graph.hpp"

namespace edc {

struct CanonicalForm {
    // canonical_label[v] = position of v in the canonical ordering
    std::vector<int> canonical_label;
    // isomorphism-invariant bytes: vertex count then packed upper-triangle bits
    std::string canonical_bytes;
};

inline constexpr int kDefaultCanonicalCap = 16;

// Iterative color refinement, then exhaustive branching on the first
// non-singleton cell. Throws std::invalid_argument above the cap.
CanonicalForm canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

inline std::string canonical_bytes(const Graph& g, int cap = kDefaultCanonicalCap) {
    return canonical_form(g, cap).canonical_bytes;
}

bool isomorphic(const Graph& a, const Graph& b, int cap = kDefaultCanonicalCap);

}  // namespace edc

#endif

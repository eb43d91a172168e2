#ifndef SEPSYS_COVERS_HPP
#define SEPSYS_COVERS_HPP

#include <array>
#include <vector>

#include "sepsys/system.hpp"

namespace sepsys {

// Cover of E(g) by K4 subdivisions and single edges. Greedy: peel off a
// subdivision through a rotation-found cycle and a crossing chord pair while
// one exists, fall back to single edges. The size is reported by the caller
// against the 2n-3 target; it is measured, not guaranteed.
std::vector<SystemElement> k4_cover(const Graph& g);

// Cover of E(g) by cycles and single edges, measured against the n-1 target.
std::vector<SystemElement> cycle_edge_cover(const Graph& g);

// Two cycles whose union is exactly the edge set of a K4 subdivision.
std::array<SystemElement, 2> two_cycle_cover(const Graph& g, const SystemElement& k4);

}  // namespace sepsys

#endif

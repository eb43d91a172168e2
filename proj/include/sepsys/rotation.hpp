#ifndef SEPSYS_ROTATION_HPP
#define SEPSYS_ROTATION_HPP

#include <map>
#include <span>
#include <vector>

#include "sepsys/system.hpp"

namespace sepsys {

// A path that cannot be extended at the free endpoint of any of its derived
// paths, together with the derived endpoint set and the exchange tree needed
// to materialize any derived path.
struct RotationRecord {
    std::vector<Vertex> path;  // free end first, fixed end last
    Vertex fixed_end = -1;
    std::vector<Vertex> derived;  // sorted endpoint set S, always contains path.front()
    // endpoint -> (previous endpoint, pivot vertex of the exchange)
    std::map<Vertex, std::pair<Vertex, Vertex>> parent;

    // Replays the exchange sequence leading to endpoint s. The result starts
    // at s and ends at fixed_end.
    std::vector<Vertex> derived_path_to(Vertex s) const;
};

// Grows a path greedily and closes it under elementary exchanges, extending
// whenever a derived endpoint sees a vertex off the path. Terminates because
// the path length strictly increases. Asserts |N(S)| <= 2|S| on return.
RotationRecord rotation_maximal_path(const Graph& g);

// Endpoint set of all paths derived from `path` by exchanges fixing its last
// vertex. `path` must be a path of g ending at fixed_end.
std::vector<Vertex> derived_endpoints(const Graph& g, std::span<const Vertex> path,
                                      Vertex fixed_end);

// Neighborhood of a vertex set: vertices outside S adjacent to S.
std::vector<Vertex> neighborhood(const Graph& g, std::span<const Vertex> s);

struct ClosureCycle {
    SystemElement element;             // a Cycle, or a SingleEdge in the degenerate case
    std::vector<Vertex> derived_path;  // the derived path the cycle was closed from
    Vertex anchor = -1;                // vertex of P closest to the fixed end with a
                                       // neighbor in S
    Vertex start = -1;                 // that neighbor (the derived endpoint used)
};

// Closes a derived path into an edge or cycle containing S and N(S).
ClosureCycle build_closure_cycle(const Graph& g, const RotationRecord& rec);

}  // namespace sepsys

#endif

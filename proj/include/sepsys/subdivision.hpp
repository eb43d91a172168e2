#ifndef SEPSYS_SUBDIVISION_HPP
#define SEPSYS_SUBDIVISION_HPP

#include <optional>
#include <vector>

#include "sepsys/matchings.hpp"
#include "sepsys/system.hpp"

namespace sepsys {

// The spanning structure a level's matchings are built against: the closure
// cycle with its H-vertex order, plus (outside cycle mode) a crossing chord
// pair turning it into a K4 subdivision.
struct Backbone {
    CycleOrder order;
    std::optional<IndexEdge> chord_a;  // positional; contains the smallest position
    std::optional<IndexEdge> chord_b;

    bool has_chords() const { return chord_a.has_value(); }
};

enum class MatchingShape { Elementary, Jumbled };

// Elementary: at most one start per interval. Asserts that an elementary
// matching has no two crossing edges.
MatchingShape classify_matching(const EasyMatching& m);

// Covers an elementary matching by one K4 subdivision obtained from the
// backbone by shortcutting arcs, plus at most one single edge (the edge
// covering the whole chord span, or a second edge crossing the same chord).
std::vector<SystemElement> build_elementary_elements(const Graph& g, const Backbone& bb,
                                                     const EasyMatching& m, int level);

struct RerouteInterval {
    int r = 0;                    // interval of the starts
    std::vector<int> w;           // the 2s matched positions in order
    std::vector<std::vector<Vertex>> removed;  // dropped segments, odd steps in order
    std::vector<Vertex> replacement;           // the rerouted subpath, from w.front()
};

struct Reroute {
    std::vector<Vertex> cycle;  // the rerouted cycle
    std::vector<RerouteInterval> intervals;
};

// Replaces, for every interval hosting starts, the cycle segment spanning the
// matched vertices by a subpath of segment+matching that contains the
// matching edges and keeps the segment's endpoints.
Reroute reroute_cycle(const Graph& g, const CycleOrder& order, const EasyMatching& m);

// Jumbled matchings: reroute, then restore two dropped segments of the first
// interval with at least two starts, giving a K4 subdivision containing m.
SystemElement build_jumbled_element(const Graph& g, const Backbone& bb,
                                    const EasyMatching& m, int level);

// Cycle mode: the rerouted cycle itself is the element.
SystemElement build_cycle_element(const Graph& g, const CycleOrder& order,
                                  const EasyMatching& m, int level);

}  // namespace sepsys

#endif

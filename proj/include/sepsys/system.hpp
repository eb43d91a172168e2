#ifndef SEPSYS_SYSTEM_HPP
#define SEPSYS_SYSTEM_HPP

#include <string>
#include <variant>
#include <vector>

#include "sepsys/graph.hpp"

namespace sepsys {

enum class ElementKind { SingleEdge, Cycle, K4Subdivision };

enum class Mode { K4, CycleOnly };

// Which construction step produced an element; kept for accounting and
// certificate provenance, never consulted by the verifier.
enum class Step {
    KsSingleton,
    OuterplanarSingleton,
    Cover,
    Elementary,
    Jumbled,
    CycleMode,
};

std::string to_string(Step s);
std::string to_string(Mode m);

struct EdgeWitness {
    Vertex u, v;
};

struct CycleWitness {
    std::vector<Vertex> vertices;  // cyclic sequence, closing edge implied
};

struct SystemElement {
    std::vector<EdgeId> edges;  // sorted, unique
    std::variant<EdgeWitness, CycleWitness, K4Witness> witness;
    int level = 0;
    Step step = Step::KsSingleton;

    ElementKind kind() const { return static_cast<ElementKind>(witness.index()); }
    bool contains(EdgeId id) const;
};

SystemElement make_single_edge(const Graph& g, EdgeId id, int level, Step step);
SystemElement make_cycle(const Graph& g, std::vector<Vertex> cycle, int level, Step step);
// Validates that the edges form a K4 subdivision and records the witness.
SystemElement make_k4(const Graph& g, std::vector<EdgeId> edges, int level, Step step);

// Per-level accounting recorded while the system is built. The emitted_*
// fields describe the construction before redundancy pruning; kept counts are
// derived from the final element list.
struct LevelInfo {
    int level = 0;
    int closure_size = 0;       // |S|
    int neighborhood_size = 0;  // |N(S)|
    int h = 0;                  // |V(H)|
    int h_edges = 0;            // e(H)
    int ks_size = 0;            // singletons from the backbone
    int outerplanar_size = 0;   // singletons from the chordless branch
    int cover_size = 0;         // |D'| as emitted
    int cover_target = 0;       // 2h-3 (K4 mode) or h-1 (cycle mode)
    int matching_parts = 0;     // nonempty easy matchings at this level
    int matching_elements = 0;  // elements emitted from those matchings
    int emitted = 0;            // elements emitted at this level in total
};

struct SeparatingSystem {
    Mode mode = Mode::K4;
    std::vector<SystemElement> elements;
    std::vector<LevelInfo> levels;

    int size() const { return static_cast<int>(elements.size()); }
};

}  // namespace sepsys

#endif

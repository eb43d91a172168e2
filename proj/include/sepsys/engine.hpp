#ifndef SEPSYS_ENGINE_HPP
#define SEPSYS_ENGINE_HPP

#include <vector>

#include "sepsys/matchings.hpp"
#include "sepsys/system.hpp"

namespace sepsys {

struct EngineOptions {
    // Drop elements whose removal keeps the system separating. The emitted
    // per-level statistics are recorded before the drop.
    bool prune = true;
};

// What one level of the construction generated, kept for tests and reports.
struct LevelTrace {
    int level = 0;
    std::vector<Vertex> closure;           // S
    std::vector<Vertex> order;             // H-vertices along the backbone cycle
    std::vector<IndexEdge> chord_edges;    // positional edges handed to the families
    std::vector<EasyMatching> matchings;   // the nonempty refined parts
    bool backbone = false;                 // a crossing chord pair was used
};

struct BuildResult {
    SeparatingSystem system;
    std::vector<LevelTrace> trace;
};

// Peels the derived set level by level: backbone singletons, a cover of the
// rest of the incident subgraph, and one or two elements per easy matching,
// then recurses on the remainder. The final system satisfies the mode's size
// bound (82n or 41n), which is checked, not assumed.
BuildResult build_separating_system_traced(const Graph& g, Mode mode, EngineOptions opts = {});
SeparatingSystem build_separating_system(const Graph& g, Mode mode);

struct LevelReport {
    int level = 0;
    int closure_size = 0;
    int ks = 0, outerplanar = 0, cover = 0, elementary = 0, jumbled = 0, cycle_mode = 0;
    int total = 0;
    long long budget = 0;  // 82|S| or 41|S|
    bool within_budget = false;
};

// Per-level counts per construction step, derived from element provenance.
std::vector<LevelReport> level_accounting(const SeparatingSystem& sys);

}  // namespace sepsys

#endif

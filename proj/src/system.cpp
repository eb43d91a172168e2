#include "sepsys/system.hpp"

#include <algorithm>

#include "sepsys/errors.hpp"

namespace sepsys {

std::string to_string(Step s) {
    switch (s) {
        case Step::KsSingleton: return "ks-singleton";
        case Step::OuterplanarSingleton: return "outerplanar-singleton";
        case Step::Cover: return "cover";
        case Step::Elementary: return "elementary";
        case Step::Jumbled: return "jumbled";
        case Step::CycleMode: return "cycle-mode";
    }
    return "?";
}

std::string to_string(Mode m) { return m == Mode::K4 ? "k4" : "cycle"; }

bool SystemElement::contains(EdgeId id) const {
    return std::binary_search(edges.begin(), edges.end(), id);
}

SystemElement make_single_edge(const Graph& g, EdgeId id, int level, Step step) {
    const Edge& e = g.edge(id);
    SystemElement el;
    el.edges = {id};
    el.witness = EdgeWitness{e.u, e.v};
    el.level = level;
    el.step = step;
    return el;
}

SystemElement make_cycle(const Graph& g, std::vector<Vertex> cycle, int level, Step step) {
    SEPSYS_CHECK(cycle.size() >= 3, "cycle witness too short");
    std::vector<Vertex> sorted(cycle);
    std::sort(sorted.begin(), sorted.end());
    SEPSYS_CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                 "cycle witness repeats a vertex");
    std::vector<EdgeId> ids;
    for (size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i];
        Vertex b = cycle[(i + 1) % cycle.size()];
        auto id = g.edge_between(a, b);
        SEPSYS_CHECK(id.has_value(), "cycle witness uses a missing edge");
        ids.push_back(*id);
    }
    std::sort(ids.begin(), ids.end());
    SEPSYS_CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end(),
                 "cycle witness repeats an edge");
    SystemElement el;
    el.edges = std::move(ids);
    el.witness = CycleWitness{std::move(cycle)};
    el.level = level;
    el.step = step;
    return el;
}

SystemElement make_k4(const Graph& g, std::vector<EdgeId> edges, int level, Step step) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph sub = g.edge_subgraph(edges);
    auto witness = is_k4_subdivision(sub);
    SEPSYS_CHECK(witness.has_value(), "element is not a K4 subdivision");
    SystemElement el;
    el.edges = std::move(edges);
    el.witness = *witness;
    el.level = level;
    el.step = step;
    return el;
}

}  // namespace sepsys

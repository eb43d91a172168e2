#include "sepsys/covers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sepsys/errors.hpp"
#include "sepsys/matchings.hpp"
#include "sepsys/rotation.hpp"

namespace sepsys {

namespace {

// edges of the connected component of the smallest non-isolated vertex
std::vector<EdgeId> first_component_edges(const Graph& g) {
    Vertex start = -1;
    for (Vertex v : g.vertices())
        if (g.degree(v) > 0) {
            start = v;
            break;
        }
    SEPSYS_CHECK(start >= 0, "no edges left");
    std::set<Vertex> seen{start};
    std::vector<Vertex> stack{start};
    std::set<EdgeId> ids;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (auto [w, id] : g.incident(v)) {
            ids.insert(id);
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return {ids.begin(), ids.end()};
}

// chords of `cycle` present in g, as positional pairs over the cycle order
std::vector<IndexEdge> cycle_chords(const Graph& g, const std::vector<Vertex>& cycle) {
    std::map<Vertex, int> pos;  // 1-based
    for (size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<int>(i) + 1;
    const int n = static_cast<int>(cycle.size());
    std::vector<IndexEdge> chords;
    for (const Edge& e : g.edges()) {
        auto iu = pos.find(e.u), iv = pos.find(e.v);
        if (iu == pos.end() || iv == pos.end()) continue;
        int a = iu->second, b = iv->second;
        if (a > b) std::swap(a, b);
        if (b - a == 1 || (a == 1 && b == n)) continue;  // cycle edge
        chords.push_back({a, b});
    }
    std::sort(chords.begin(), chords.end());
    return chords;
}

std::vector<EdgeId> element_edge_ids(const SystemElement& el) { return el.edges; }

}  // namespace

std::vector<SystemElement> k4_cover(const Graph& g) {
    std::vector<SystemElement> out;
    Graph rest = g;
    while (rest.edge_count() > 0) {
        std::vector<EdgeId> comp_ids = first_component_edges(rest);
        Graph comp = rest.edge_subgraph(comp_ids);

        if (is_k4_subdivision(comp)) {
            out.push_back(make_k4(rest, comp_ids, 0, Step::Cover));
            rest = rest.without_edges(comp_ids);
            continue;
        }

        RotationRecord rec = rotation_maximal_path(comp);
        ClosureCycle cc = build_closure_cycle(comp, rec);
        if (cc.element.kind() == ElementKind::Cycle) {
            const auto& cyc = std::get<CycleWitness>(cc.element.witness).vertices;
            std::vector<IndexEdge> chords = cycle_chords(comp, cyc);
            // lexicographically smallest crossing pair
            const IndexEdge* ca = nullptr;
            const IndexEdge* cb = nullptr;
            for (size_t i = 0; i < chords.size() && !ca; ++i)
                for (size_t j = i + 1; j < chords.size(); ++j)
                    if (index_edges_cross(chords[i], chords[j])) {
                        ca = &chords[i];
                        cb = &chords[j];
                        break;
                    }
            if (ca) {
                std::vector<EdgeId> ids = element_edge_ids(cc.element);
                auto chord_id = [&](const IndexEdge& c) {
                    auto id = comp.edge_between(cyc[c.start - 1], cyc[c.end - 1]);
                    SEPSYS_CHECK(id.has_value(), "chord edge missing");
                    return *id;
                };
                ids.push_back(chord_id(*ca));
                ids.push_back(chord_id(*cb));
                out.push_back(make_k4(rest, ids, 0, Step::Cover));
                rest = rest.without_edges(out.back().edges);
                continue;
            }
        }
        // no subdivision through this cycle: retire its edges as singletons
        for (EdgeId id : cc.element.edges)
            out.push_back(make_single_edge(rest, id, 0, Step::Cover));
        rest = rest.without_edges(cc.element.edges);
    }
    return out;
}

std::vector<SystemElement> cycle_edge_cover(const Graph& g) {
    std::vector<SystemElement> out;
    Graph rest = g;
    while (rest.edge_count() > 0) {
        std::vector<EdgeId> comp_ids = first_component_edges(rest);
        Graph comp = rest.edge_subgraph(comp_ids);

        if (is_k4_subdivision(comp)) {
            SystemElement k4 = make_k4(rest, comp_ids, 0, Step::Cover);
            auto two = two_cycle_cover(rest, k4);
            out.push_back(std::move(two[0]));
            out.push_back(std::move(two[1]));
            rest = rest.without_edges(comp_ids);
            continue;
        }
        if (comp.edge_count() < comp.vertex_count()) {  // a tree: no cycle exists
            for (EdgeId id : comp_ids) out.push_back(make_single_edge(rest, id, 0, Step::Cover));
            rest = rest.without_edges(comp_ids);
            continue;
        }
        RotationRecord rec = rotation_maximal_path(comp);
        ClosureCycle cc = build_closure_cycle(comp, rec);
        cc.element.step = Step::Cover;
        out.push_back(cc.element);
        rest = rest.without_edges(cc.element.edges);
    }
    return out;
}

std::array<SystemElement, 2> two_cycle_cover(const Graph& g, const SystemElement& k4) {
    SEPSYS_CHECK(k4.kind() == ElementKind::K4Subdivision, "two_cycle_cover needs a K4 element");
    const auto& w = std::get<K4Witness>(k4.witness);

    // witness paths: [0]=0-1 [1]=0-2 [2]=0-3 [3]=1-2 [4]=1-3 [5]=2-3,
    // each stored from the smaller branch. The two covering cycles follow the
    // pattern 1 2 3 4 1 and 1 2 4 3 1 on the branch vertices.
    auto append = [](std::vector<Vertex>& seq, const std::vector<Vertex>& path, bool reversed) {
        std::vector<Vertex> p = path;
        if (reversed) std::reverse(p.begin(), p.end());
        size_t from = seq.empty() ? 0 : 1;  // skip the junction vertex
        if (!seq.empty()) SEPSYS_CHECK(seq.back() == p.front(), "path junction mismatch");
        seq.insert(seq.end(), p.begin() + from, p.end());
    };

    std::vector<Vertex> c1;
    append(c1, w.paths[0], false);  // b0 -> b1
    append(c1, w.paths[3], false);  // b1 -> b2
    append(c1, w.paths[5], false);  // b2 -> b3
    append(c1, w.paths[2], true);   // b3 -> b0
    c1.pop_back();

    std::vector<Vertex> c2;
    append(c2, w.paths[0], false);  // b0 -> b1
    append(c2, w.paths[4], false);  // b1 -> b3
    append(c2, w.paths[5], true);   // b3 -> b2
    append(c2, w.paths[1], true);   // b2 -> b0
    c2.pop_back();

    std::array<SystemElement, 2> out{make_cycle(g, c1, k4.level, Step::Cover),
                                     make_cycle(g, c2, k4.level, Step::Cover)};
    std::set<EdgeId> uni(out[0].edges.begin(), out[0].edges.end());
    uni.insert(out[1].edges.begin(), out[1].edges.end());
    std::set<EdgeId> want(k4.edges.begin(), k4.edges.end());
    SEPSYS_CHECK(uni == want, "two cycles do not cover the subdivision exactly");
    return out;
}

}  // namespace sepsys

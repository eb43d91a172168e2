#include "sepsys/engine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sepsys/covers.hpp"
#include "sepsys/errors.hpp"
#include "sepsys/rotation.hpp"
#include "sepsys/subdivision.hpp"
#include "sepsys/verifier.hpp"

namespace sepsys {

namespace {

std::vector<IndexEdge> positional_edges(const Graph& h, const CycleOrder& ord) {
    std::vector<IndexEdge> out;
    for (const Edge& e : h.edges()) {
        int a = ord.position_of(e.u);
        int b = ord.position_of(e.v);
        if (a > b) std::swap(a, b);
        out.push_back({a, b});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All nonempty refined parts of both families, in canonical order.
std::vector<EasyMatching> refine_all(std::span<const IndexEdge> edges, int h) {
    std::vector<EasyMatching> parts;
    for (auto& [k, es] : gap_classes(edges, h))
        for (EasyMatching& m : refine_class(Family::Gap, k, es, h)) parts.push_back(std::move(m));
    for (auto& [k, es] : skew_classes(edges, h))
        for (EasyMatching& m : refine_class(Family::Skew, k, es, h))
            parts.push_back(std::move(m));
    return parts;
}

}  // namespace

BuildResult build_separating_system_traced(const Graph& g, Mode mode, EngineOptions opts) {
    BuildResult res;
    res.system.mode = mode;
    Graph cur = g;
    int level = 0;

    while (cur.edge_count() > 0) {
        LevelInfo info;
        info.level = level;
        LevelTrace trace;
        trace.level = level;

        RotationRecord rec = rotation_maximal_path(cur);
        ClosureCycle cc = build_closure_cycle(cur, rec);
        const std::vector<Vertex>& closure = rec.derived;
        const int s_size = static_cast<int>(closure.size());
        info.closure_size = s_size;
        info.neighborhood_size = static_cast<int>(neighborhood(cur, closure).size());
        trace.closure = closure;

        std::set<Vertex> in_s(closure.begin(), closure.end());
        std::vector<EdgeId> h_ids;
        for (const Edge& e : cur.edges())
            if (in_s.count(e.u) || in_s.count(e.v)) h_ids.push_back(e.id);
        Graph H = cur.edge_subgraph(h_ids);
        info.h = H.vertex_count();
        info.h_edges = H.edge_count();
        SEPSYS_CHECK(H.vertex_count() <= 3 * s_size,
                     "level " + std::to_string(level) + ": h exceeds 3|S|");
        std::set<EdgeId> h_set(h_ids.begin(), h_ids.end());

        const bool c_is_cycle = cc.element.kind() == ElementKind::Cycle;
        std::vector<Vertex> cyc_seq;
        if (c_is_cycle)
            cyc_seq = std::get<CycleWitness>(cc.element.witness).vertices;
        else {
            const auto& w = std::get<EdgeWitness>(cc.element.witness);
            cyc_seq = {std::min(w.u, w.v), std::max(w.u, w.v)};
        }

        const size_t emitted_before = res.system.elements.size();
        auto emit = [&](SystemElement el) {
            el.level = level;
            res.system.elements.push_back(std::move(el));
        };

        if (mode == Mode::K4) {
            std::optional<CycleOrder> ord;
            std::vector<IndexEdge> chords;  // H-edges off the cycle, positional
            std::optional<std::pair<IndexEdge, IndexEdge>> cross;
            std::set<EdgeId> c_ids(cc.element.edges.begin(), cc.element.edges.end());
            if (c_is_cycle) {
                ord = order_along_cycle(cyc_seq, H.vertices());
                for (const Edge& e : H.edges()) {
                    if (c_ids.count(e.id)) continue;
                    int a = ord->position_of(e.u);
                    int b = ord->position_of(e.v);
                    if (a > b) std::swap(a, b);
                    chords.push_back({a, b});
                }
                std::sort(chords.begin(), chords.end());
                for (size_t i = 0; i < chords.size() && !cross; ++i)
                    for (size_t j = i + 1; j < chords.size(); ++j)
                        if (index_edges_cross(chords[i], chords[j])) {
                            cross = {chords[i], chords[j]};
                            break;
                        }
            }

            if (!cross) {
                // no crossing chords: the incident subgraph is outerplanar and
                // its edges are emitted one by one
                SEPSYS_CHECK(outerplanar_edge_bound_ok(H.vertex_count(), H.edge_count()),
                             "level " + std::to_string(level) +
                                 ": chordless subgraph breaks the outerplanar bound");
                for (const Edge& e : H.edges())
                    emit(make_single_edge(cur, e.id, level, Step::OuterplanarSingleton));
                info.outerplanar_size = H.edge_count();
            } else {
                auto [ea, eb] = *cross;
                auto chord_id = [&](const IndexEdge& c) {
                    auto id = cur.edge_between(ord->at(c.start), ord->at(c.end));
                    SEPSYS_CHECK(id.has_value(), "chord edge vanished");
                    return *id;
                };
                std::vector<EdgeId> k_ids(cc.element.edges);
                k_ids.push_back(chord_id(ea));
                k_ids.push_back(chord_id(eb));
                (void)make_k4(cur, k_ids, level, Step::KsSingleton);  // backbone sanity

                std::vector<EdgeId> ks;
                for (EdgeId id : k_ids)
                    if (h_set.count(id)) ks.push_back(id);
                std::sort(ks.begin(), ks.end());
                ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
                SEPSYS_CHECK(static_cast<int>(ks.size()) <= 2 * s_size + 2,
                             "level " + std::to_string(level) + ": |K_S| exceeds 2|S|+2");
                for (EdgeId id : ks) emit(make_single_edge(cur, id, level, Step::KsSingleton));
                info.ks_size = static_cast<int>(ks.size());

                Graph Hp = H.without_edges(ks);
                info.cover_target = 2 * H.vertex_count() - 3;
                std::vector<SystemElement> cover = k4_cover(Hp);
                info.cover_size = static_cast<int>(cover.size());
                for (SystemElement& el : cover) {
                    el.step = Step::Cover;
                    emit(std::move(el));
                }

                Backbone bb{*ord, ea, eb};
                std::vector<IndexEdge> chord_edges = positional_edges(Hp, *ord);
                std::vector<EasyMatching> parts = refine_all(chord_edges, ord->h());
                trace.chord_edges = std::move(chord_edges);
                info.matching_parts = static_cast<int>(parts.size());
                SEPSYS_CHECK(info.matching_parts <= 12 * ord->h(),
                             "level " + std::to_string(level) + ": more than 12h parts");
                for (const EasyMatching& m : parts) {
                    if (classify_matching(m) == MatchingShape::Elementary) {
                        for (SystemElement& el : build_elementary_elements(cur, bb, m, level)) {
                            ++info.matching_elements;
                            emit(std::move(el));
                        }
                    } else {
                        ++info.matching_elements;
                        emit(build_jumbled_element(cur, bb, m, level));
                    }
                }
                SEPSYS_CHECK(info.matching_elements <= 24 * ord->h(),
                             "level " + std::to_string(level) + ": more than 24h elements");
                trace.backbone = true;
                trace.order = ord->order;
                trace.matchings = std::move(parts);
            }
        } else {
            // cycle mode: no chord search; the cycle's own incident edges are
            // the singletons and every matching part becomes one cycle
            std::vector<EdgeId> ks;
            for (EdgeId id : cc.element.edges)
                if (h_set.count(id)) ks.push_back(id);
            SEPSYS_CHECK(static_cast<int>(ks.size()) <= 2 * s_size,
                         "level " + std::to_string(level) + ": |K_S| exceeds 2|S|");
            for (EdgeId id : ks) emit(make_single_edge(cur, id, level, Step::KsSingleton));
            info.ks_size = static_cast<int>(ks.size());

            Graph Hp = H.without_edges(ks);
            info.cover_target = H.vertex_count() - 1;
            std::vector<SystemElement> cover = cycle_edge_cover(Hp);
            info.cover_size = static_cast<int>(cover.size());
            for (SystemElement& el : cover) {
                el.step = Step::Cover;
                emit(std::move(el));
            }

            if (Hp.edge_count() > 0) {
                SEPSYS_CHECK(c_is_cycle, "chords left although the closure element is an edge");
                CycleOrder ord = order_along_cycle(cyc_seq, H.vertices());
                std::vector<IndexEdge> chord_edges = positional_edges(Hp, ord);
                std::vector<EasyMatching> parts = refine_all(chord_edges, ord.h());
                trace.chord_edges = std::move(chord_edges);
                info.matching_parts = static_cast<int>(parts.size());
                SEPSYS_CHECK(info.matching_parts <= 12 * ord.h(),
                             "level " + std::to_string(level) + ": more than 12h parts");
                for (const EasyMatching& m : parts) {
                    ++info.matching_elements;
                    emit(build_cycle_element(cur, ord, m, level));
                }
                trace.order = ord.order;
                trace.matchings = std::move(parts);
            }
        }

        info.emitted = static_cast<int>(res.system.elements.size() - emitted_before);
        res.system.levels.push_back(info);
        res.trace.push_back(std::move(trace));
        cur = cur.without_vertices(closure);
        ++level;
        SEPSYS_CHECK(level <= g.vertex_count() + 1, "level count exceeded the vertex count");
    }

    if (opts.prune) prune_redundant(g, res.system);

    const long long bound = (mode == Mode::K4 ? 82LL : 41LL) * g.vertex_count();
    SEPSYS_CHECK(res.system.size() <= bound,
                 "system size " + std::to_string(res.system.size()) + " exceeds " +
                     std::to_string(bound));
    return res;
}

SeparatingSystem build_separating_system(const Graph& g, Mode mode) {
    return build_separating_system_traced(g, mode, {}).system;
}

std::vector<LevelReport> level_accounting(const SeparatingSystem& sys) {
    std::vector<LevelReport> out;
    for (const LevelInfo& li : sys.levels) {
        LevelReport r;
        r.level = li.level;
        r.closure_size = li.closure_size;
        r.budget = (sys.mode == Mode::K4 ? 82LL : 41LL) * li.closure_size;
        out.push_back(r);
    }
    for (const SystemElement& el : sys.elements) {
        SEPSYS_CHECK(el.level >= 0 && el.level < static_cast<int>(out.size()),
                     "element level outside the recorded range");
        LevelReport& r = out[el.level];
        switch (el.step) {
            case Step::KsSingleton: ++r.ks; break;
            case Step::OuterplanarSingleton: ++r.outerplanar; break;
            case Step::Cover: ++r.cover; break;
            case Step::Elementary: ++r.elementary; break;
            case Step::Jumbled: ++r.jumbled; break;
            case Step::CycleMode: ++r.cycle_mode; break;
        }
        ++r.total;
    }
    for (LevelReport& r : out) r.within_budget = r.total <= r.budget;
    return out;
}

}  // namespace sepsys

#include "sepsys/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sepsys/errors.hpp"

namespace sepsys {

namespace {

EdgeId edge_id_at(const Graph& g, const CycleOrder& ord, const IndexEdge& e) {
    auto id = g.edge_between(ord.at(e.start), ord.at(e.end));
    SEPSYS_CHECK(id.has_value(), "positional edge missing from graph");
    return *id;
}

// ids of the cycle edges between two cycle positions (forward walk)
void collect_arc_ids(const Graph& g, const std::vector<Vertex>& cycle, int from, int to,
                     std::vector<EdgeId>& out) {
    for (int p = from; p < to; ++p) {
        auto id = g.edge_between(cycle[p], cycle[p + 1]);
        SEPSYS_CHECK(id.has_value(), "cycle edge missing from graph");
        out.push_back(*id);
    }
}

std::vector<EdgeId> all_cycle_ids(const Graph& g, const std::vector<Vertex>& cycle) {
    std::vector<EdgeId> ids;
    collect_arc_ids(g, cycle, 0, static_cast<int>(cycle.size()) - 1, ids);
    auto closing = g.edge_between(cycle.back(), cycle.front());
    SEPSYS_CHECK(closing.has_value(), "closing cycle edge missing");
    ids.push_back(*closing);
    return ids;
}

// K4 subdivision assembled from the backbone cycle plus two crossing chords,
// with a set of matching edges shortcutting arcs of the cycle. Every shortcut
// arc must be free of chord attachment points in its interior.
SystemElement shortcut_subdivision(const Graph& g, const CycleOrder& ord, IndexEdge chord_a,
                                   IndexEdge chord_b, std::span<const IndexEdge> shortcuts,
                                   int level, Step step) {
    std::set<EdgeId> edges;
    for (EdgeId id : all_cycle_ids(g, ord.cycle)) edges.insert(id);
    edges.insert(edge_id_at(g, ord, chord_a));
    edges.insert(edge_id_at(g, ord, chord_b));

    std::set<int> attachments{chord_a.start, chord_a.end, chord_b.start, chord_b.end};
    std::vector<std::pair<int, int>> arcs;
    for (const IndexEdge& e : shortcuts) {
        for (int a : attachments)
            SEPSYS_CHECK(!(e.start < a && a < e.end),
                         "shortcut arc passes over a chord attachment");
        for (auto [lo, hi] : arcs)
            SEPSYS_CHECK(e.end < lo || hi < e.start, "overlapping shortcut arcs");
        arcs.emplace_back(e.start, e.end);

        std::vector<EdgeId> removed;
        collect_arc_ids(g, ord.cycle, ord.cycle_pos[e.start - 1], ord.cycle_pos[e.end - 1],
                        removed);
        for (EdgeId id : removed) edges.erase(id);
        edges.insert(edge_id_at(g, ord, e));
    }
    return make_k4(g, {edges.begin(), edges.end()}, level, step);
}

bool covers(const SystemElement& el, EdgeId id) { return el.contains(id); }

}  // namespace

MatchingShape classify_matching(const EasyMatching& m) {
    SEPSYS_CHECK(is_easy_matching(m), "classify needs an easy matching");
    std::map<int, int> starts;
    bool elementary = true;
    for (const IndexEdge& e : m.edges)
        if (++starts[m.slicing.interval_of(e.start)] > 1) elementary = false;
    if (elementary) {
        for (size_t i = 0; i < m.edges.size(); ++i)
            for (size_t j = i + 1; j < m.edges.size(); ++j)
                SEPSYS_CHECK(!index_edges_cross(m.edges[i], m.edges[j]),
                             "elementary matching with crossing edges");
    }
    return elementary ? MatchingShape::Elementary : MatchingShape::Jumbled;
}

std::vector<SystemElement> build_elementary_elements(const Graph& g, const Backbone& bb,
                                                     const EasyMatching& m, int level) {
    SEPSYS_CHECK(bb.has_chords(), "elementary construction needs backbone chords");
    SEPSYS_CHECK(!m.edges.empty(), "elementary construction needs a nonempty matching");
    SEPSYS_CHECK(classify_matching(m) == MatchingShape::Elementary, "matching is jumbled");
    const CycleOrder& ord = bb.order;
    const IndexEdge e = *bb.chord_a;
    const IndexEdge ep = *bb.chord_b;

    auto crossing = [&](const IndexEdge& chord) {
        std::vector<IndexEdge> out;
        for (const IndexEdge& f : m.edges)
            if (index_edges_cross(f, chord)) out.push_back(f);
        return out;
    };
    std::vector<IndexEdge> cross_a = crossing(e);
    std::vector<IndexEdge> cross_b = crossing(ep);

    std::vector<SystemElement> out;
    if (!cross_a.empty() || !cross_b.empty()) {
        // some matching edge crosses a chord: rebuild the subdivision from the
        // cycle, that chord, and the crossing edge
        const IndexEdge chord = cross_a.empty() ? ep : e;
        std::vector<IndexEdge>& xs = cross_a.empty() ? cross_b : cross_a;
        SEPSYS_CHECK(xs.size() <= 2, "more than two matching edges cross one chord");
        IndexEdge f = xs.front();
        int w1 = std::min(e.start, ep.start);
        int w4 = std::max(e.end, ep.end);
        for (const IndexEdge& other : m.edges)
            SEPSYS_CHECK(other.start >= w1 || other.end <= w4,
                         "matching edge spans past both chords in the crossing case");
        std::vector<IndexEdge> shortcuts;
        for (const IndexEdge& other : m.edges)
            if (!(other == f) && !(xs.size() == 2 && other == xs[1]))
                shortcuts.push_back(other);
        out.push_back(shortcut_subdivision(g, ord, chord, f, shortcuts, level,
                                           Step::Elementary));
        SEPSYS_CHECK(covers(out.back(), edge_id_at(g, ord, f)),
                     "crossing edge missing from its subdivision");
        if (xs.size() == 2)
            out.push_back(make_single_edge(g, edge_id_at(g, ord, xs[1]), level,
                                           Step::Elementary));
    } else {
        // nothing crosses; at most one edge covers the whole chord span and is
        // emitted alone, the rest shortcut arcs of the original subdivision
        int w1 = std::min(e.start, ep.start);
        int w4 = std::max(e.end, ep.end);
        std::vector<IndexEdge> spanning, shortcuts;
        for (const IndexEdge& f : m.edges)
            (f.start <= w1 && f.end >= w4 ? spanning : shortcuts).push_back(f);
        SEPSYS_CHECK(spanning.size() <= 1, "two matching edges span the chord range");
        if (!shortcuts.empty())
            out.push_back(shortcut_subdivision(g, ord, e, ep, shortcuts, level,
                                               Step::Elementary));
        if (!spanning.empty())
            out.push_back(make_single_edge(g, edge_id_at(g, ord, spanning[0]), level,
                                           Step::Elementary));
    }

    // coverage: every matching edge lies in some emitted element
    for (const IndexEdge& f : m.edges) {
        EdgeId id = edge_id_at(g, ord, f);
        bool hit = false;
        for (const SystemElement& el : out) hit = hit || covers(el, id);
        SEPSYS_CHECK(hit, "matching edge left uncovered by the elementary construction");
    }
    return out;
}

Reroute reroute_cycle(const Graph& g, const CycleOrder& ord, const EasyMatching& m) {
    SEPSYS_CHECK(is_easy_matching(m), "reroute needs an easy matching");
    SEPSYS_CHECK(!m.edges.empty(), "reroute needs a nonempty matching");
    for (const IndexEdge& e : m.edges)
        SEPSYS_CHECK(g.edge_between(ord.at(e.start), ord.at(e.end)).has_value(),
                     "matching edge missing from the graph");

    std::map<int, std::vector<IndexEdge>> groups;
    for (const IndexEdge& e : m.edges) groups[m.slicing.interval_of(e.start)].push_back(e);

    Reroute out;
    std::map<int, const RerouteInterval*> span_at;  // cycle position of w_1 -> interval

    for (auto& [r, es] : groups) {
        std::sort(es.begin(), es.end());
        const int s = static_cast<int>(es.size());
        SEPSYS_CHECK(s % 2 == 1, "interval start count must be odd");

        RerouteInterval ri;
        ri.r = r;
        for (const IndexEdge& e : es) ri.w.push_back(e.start);
        for (const IndexEdge& e : es) ri.w.push_back(e.end);
        SEPSYS_CHECK(std::is_sorted(ri.w.begin(), ri.w.end()),
                     "matched positions not ordered: crossing property violated");
        for (int i = 0; i < s; ++i)
            SEPSYS_CHECK(ri.w[i + s] == es[i].end, "pairing w_i w_{i+s} violated");

        // the union of the segment and the matching is subcubic with the inner
        // matched vertices as its only degree-3 vertices
        {
            std::map<Vertex, int> vdeg;
            int from = ord.cycle_pos[ri.w.front() - 1];
            int to = ord.cycle_pos[ri.w.back() - 1];
            for (int p = from; p < to; ++p) {
                ++vdeg[ord.cycle[p]];
                ++vdeg[ord.cycle[p + 1]];
            }
            for (const IndexEdge& e : es) {
                ++vdeg[ord.at(e.start)];
                ++vdeg[ord.at(e.end)];
            }
            std::set<Vertex> deg3;
            for (auto [v, d] : vdeg) {
                SEPSYS_CHECK(d <= 3, "segment plus matching is not subcubic");
                if (d == 3) deg3.insert(v);
            }
            std::set<Vertex> expect;
            for (size_t i = 1; i + 1 < ri.w.size(); ++i) expect.insert(ord.at(ri.w[i]));
            SEPSYS_CHECK(deg3 == expect, "degree-3 vertices are not the inner matched ones");
        }

        // drop the odd-step segments, keep the rest plus the matching
        std::map<Vertex, std::vector<Vertex>> adj;
        auto add = [&](Vertex a, Vertex b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        };
        for (int i = 1; i <= 2 * s - 1; ++i) {
            int from = ord.cycle_pos[ri.w[i - 1] - 1];
            int to = ord.cycle_pos[ri.w[i] - 1];
            std::vector<Vertex> seg(ord.cycle.begin() + from, ord.cycle.begin() + to + 1);
            if (i % 2 == 1) {
                ri.removed.push_back(seg);
            } else {
                for (size_t p = 0; p + 1 < seg.size(); ++p) add(seg[p], seg[p + 1]);
            }
        }
        for (const IndexEdge& e : es) add(ord.at(e.start), ord.at(e.end));

        // trace the replacement path from w_1 to w_{2s}
        Vertex first = ord.at(ri.w.front());
        Vertex last = ord.at(ri.w.back());
        for (auto& [v, nb] : adj)
            SEPSYS_CHECK(nb.size() <= 2, "replacement subpath has a degree-3 vertex");
        SEPSYS_CHECK(adj[first].size() == 1 && adj[last].size() == 1,
                     "replacement subpath endpoints are not the segment ends");
        std::vector<Vertex> trace{first};
        Vertex prev = -1, cur = first;
        while (cur != last) {
            const auto& nb = adj[cur];
            Vertex nxt;
            if (nb.size() == 1) {
                nxt = nb[0];
                SEPSYS_CHECK(nxt != prev, "replacement trace hit a dead end");
            } else {
                nxt = nb[0] != prev ? nb[0] : nb[1];
            }
            prev = cur;
            cur = nxt;
            trace.push_back(cur);
            SEPSYS_CHECK(trace.size() <= adj.size(), "replacement trace loops");
        }
        size_t edge_count = 0;
        for (auto& [v, nb] : adj) edge_count += nb.size();
        SEPSYS_CHECK(trace.size() == edge_count / 2 + 1,
                     "replacement subpath is not connected");
        ri.replacement = std::move(trace);
        out.intervals.push_back(std::move(ri));
    }

    for (const RerouteInterval& ri : out.intervals)
        span_at[ord.cycle_pos[ri.w.front() - 1]] = &ri;

    // splice: walk the cycle, swapping each spanned segment for its replacement
    const int n = static_cast<int>(ord.cycle.size());
    for (int p = 0; p < n; ++p) {
        auto it = span_at.find(p);
        if (it == span_at.end()) {
            out.cycle.push_back(ord.cycle[p]);
        } else {
            const RerouteInterval& ri = *it->second;
            out.cycle.insert(out.cycle.end(), ri.replacement.begin(), ri.replacement.end());
            p = ord.cycle_pos[ri.w.back() - 1];  // resume after the spanned segment
        }
    }
    return out;
}

SystemElement build_cycle_element(const Graph& g, const CycleOrder& ord,
                                  const EasyMatching& m, int level) {
    Reroute rr = reroute_cycle(g, ord, m);
    SystemElement el = make_cycle(g, rr.cycle, level, Step::CycleMode);
    for (const IndexEdge& e : m.edges)
        SEPSYS_CHECK(el.contains(edge_id_at(g, ord, e)),
                     "rerouted cycle misses a matching edge");
    return el;
}

SystemElement build_jumbled_element(const Graph& g, const Backbone& bb,
                                    const EasyMatching& m, int level) {
    SEPSYS_CHECK(classify_matching(m) == MatchingShape::Jumbled, "matching is elementary");
    const CycleOrder& ord = bb.order;
    Reroute rr = reroute_cycle(g, ord, m);

    // first interval with at least two starts; its count is odd, hence >= 3
    const RerouteInterval* chosen = nullptr;
    for (const RerouteInterval& ri : rr.intervals)
        if (ri.w.size() >= 4) {
            chosen = &ri;
            break;
        }
    SEPSYS_CHECK(chosen != nullptr, "jumbled matching without a crowded interval");
    const int s = static_cast<int>(chosen->w.size()) / 2;
    SEPSYS_CHECK(s >= 3, "crowded interval has fewer than three starts");

    // restore the dropped segments at steps 1 and s+2 (both odd)
    const std::vector<Vertex>& seg1 = chosen->removed.at(0);
    const std::vector<Vertex>& seg2 = chosen->removed.at((s + 2 - 1) / 2);

    std::vector<EdgeId> edges;
    for (size_t i = 0; i < rr.cycle.size(); ++i) {
        auto id = g.edge_between(rr.cycle[i], rr.cycle[(i + 1) % rr.cycle.size()]);
        SEPSYS_CHECK(id.has_value(), "rerouted cycle edge missing");
        edges.push_back(*id);
    }
    for (const std::vector<Vertex>* seg : {&seg1, &seg2})
        for (size_t i = 0; i + 1 < seg->size(); ++i) {
            auto id = g.edge_between((*seg)[i], (*seg)[i + 1]);
            SEPSYS_CHECK(id.has_value(), "restored segment edge missing");
            edges.push_back(*id);
        }

    SystemElement el = make_k4(g, std::move(edges), level, Step::Jumbled);

    // branch vertices are the ends of the restored segments, and they appear
    // along the rerouted cycle in the order w_1, w_{s+2}, w_2, w_{s+3}
    const auto& witness = std::get<K4Witness>(el.witness);
    std::set<Vertex> branch(witness.branch.begin(), witness.branch.end());
    std::set<Vertex> expect{ord.at(chosen->w[0]), ord.at(chosen->w[1]),
                            ord.at(chosen->w[s + 1]), ord.at(chosen->w[s + 2])};
    SEPSYS_CHECK(branch == expect, "branch vertices differ from the restored segment ends");

    auto pos_in_replacement = [&](Vertex v) {
        auto it = std::find(chosen->replacement.begin(), chosen->replacement.end(), v);
        SEPSYS_CHECK(it != chosen->replacement.end(), "branch vertex off the replacement");
        return it - chosen->replacement.begin();
    };
    long p1 = pos_in_replacement(ord.at(chosen->w[0]));
    long p2 = pos_in_replacement(ord.at(chosen->w[s + 1]));
    long p3 = pos_in_replacement(ord.at(chosen->w[1]));
    long p4 = pos_in_replacement(ord.at(chosen->w[s + 2]));
    SEPSYS_CHECK(p1 < p2 && p2 < p3 && p3 < p4,
                 "restored segment ends out of order along the rerouted path");

    for (const IndexEdge& e : m.edges)
        SEPSYS_CHECK(el.contains(edge_id_at(g, ord, e)),
                     "jumbled subdivision misses a matching edge");
    return el;
}

}  // namespace sepsys

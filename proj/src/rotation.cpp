#include "sepsys/rotation.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sepsys/errors.hpp"

namespace sepsys {

namespace {

// Applies one elementary exchange to a path whose free end is seq.front():
// pick the pivot x at position i >= 2, reverse the prefix before it.
std::vector<Vertex> apply_exchange(const std::vector<Vertex>& seq, Vertex pivot) {
    auto it = std::find(seq.begin(), seq.end(), pivot);
    SEPSYS_CHECK(it != seq.end() && it != seq.begin(), "exchange pivot not on path");
    size_t i = static_cast<size_t>(it - seq.begin());
    SEPSYS_CHECK(i >= 2, "exchange pivot adjacent to the free end changes nothing");
    std::vector<Vertex> out;
    out.reserve(seq.size());
    for (size_t k = i; k-- > 0;) out.push_back(seq[k]);  // reversed prefix
    for (size_t k = i; k < seq.size(); ++k) out.push_back(seq[k]);
    return out;
}

struct ClosureResult {
    std::vector<Vertex> derived;                         // sorted endpoints
    std::map<Vertex, std::pair<Vertex, Vertex>> parent;  // endpoint -> (prev, pivot)
    bool extendable = false;
    Vertex extend_endpoint = -1;  // derived endpoint with an off-path neighbor
    Vertex extend_to = -1;        // smallest such neighbor
};

// Breadth-first closure over derived endpoints, one representative path per
// endpoint. Stops early when `allow_extension` and some endpoint has a
// neighbor off the path.
ClosureResult closure(const Graph& g, const std::vector<Vertex>& path, bool allow_extension) {
    std::set<Vertex> on_path(path.begin(), path.end());
    ClosureResult res;
    std::set<Vertex> seen{path.front()};
    std::map<Vertex, std::vector<Vertex>> rep;  // endpoint -> representative path
    rep[path.front()] = path;
    std::deque<Vertex> queue{path.front()};

    while (!queue.empty()) {
        Vertex s = queue.front();
        queue.pop_front();
        const std::vector<Vertex>& seq = rep[s];
        if (allow_extension) {
            for (auto [y, id] : g.incident(s)) {
                (void)id;
                if (!on_path.count(y)) {
                    res.extendable = true;
                    res.extend_endpoint = s;
                    res.extend_to = y;
                    res.derived.assign(seen.begin(), seen.end());
                    return res;
                }
            }
        }
        std::map<Vertex, size_t> pos;
        for (size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = i;
        for (auto [x, id] : g.incident(s)) {
            (void)id;
            auto it = pos.find(x);
            if (it == pos.end()) continue;  // off path; only reachable without extension
            size_t i = it->second;
            if (i < 2) continue;  // pivot next to the free end: same path
            Vertex new_end = seq[i - 1];
            if (seen.insert(new_end).second) {
                rep[new_end] = apply_exchange(seq, x);
                res.parent[new_end] = {s, x};
                queue.push_back(new_end);
            }
        }
    }
    res.derived.assign(seen.begin(), seen.end());
    return res;
}

void validate_path(const Graph& g, std::span<const Vertex> path) {
    SEPSYS_REQUIRE(!path.empty(), "empty path");
    std::set<Vertex> seen;
    for (Vertex v : path) {
        SEPSYS_REQUIRE(g.has_vertex(v), "path vertex not in graph");
        SEPSYS_REQUIRE(seen.insert(v).second, "path repeats a vertex");
    }
    for (size_t i = 0; i + 1 < path.size(); ++i)
        SEPSYS_REQUIRE(g.edge_between(path[i], path[i + 1]).has_value(),
                       "consecutive path vertices are not adjacent");
}

}  // namespace

std::vector<Vertex> RotationRecord::derived_path_to(Vertex s) const {
    // collect the exchange chain from the tree root down to s
    std::vector<std::pair<Vertex, Vertex>> chain;  // (endpoint reached, pivot)
    Vertex cur = s;
    while (cur != path.front()) {
        auto it = parent.find(cur);
        SEPSYS_CHECK(it != parent.end(), "endpoint not in the exchange tree");
        chain.emplace_back(cur, it->second.second);
        cur = it->second.first;
    }
    std::vector<Vertex> seq = path;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        seq = apply_exchange(seq, it->second);
        SEPSYS_CHECK(seq.front() == it->first, "exchange replay mismatch");
    }
    return seq;
}

std::vector<Vertex> neighborhood(const Graph& g, std::span<const Vertex> s) {
    std::set<Vertex> in_s(s.begin(), s.end());
    std::set<Vertex> out;
    for (Vertex v : s)
        for (auto [w, id] : g.incident(v)) {
            (void)id;
            if (!in_s.count(w)) out.insert(w);
        }
    return {out.begin(), out.end()};
}

std::vector<Vertex> derived_endpoints(const Graph& g, std::span<const Vertex> path,
                                      Vertex fixed_end) {
    validate_path(g, path);
    SEPSYS_REQUIRE(path.back() == fixed_end, "path does not end at the fixed vertex");
    if (path.size() == 1) return {};
    std::vector<Vertex> p(path.begin(), path.end());
    return closure(g, p, /*allow_extension=*/false).derived;
}

RotationRecord rotation_maximal_path(const Graph& g) {
    SEPSYS_REQUIRE(g.edge_count() > 0, "rotation needs at least one edge");

    Vertex start = -1;
    for (Vertex v : g.vertices())
        if (g.degree(v) > 0) {
            start = v;
            break;
        }

    std::deque<Vertex> dq{start};
    std::set<Vertex> on_path{start};
    auto extend = [&](bool back) {
        for (;;) {
            Vertex end = back ? dq.back() : dq.front();
            Vertex next = -1;
            for (auto [w, id] : g.incident(end)) {
                (void)id;
                if (!on_path.count(w)) {
                    next = w;
                    break;  // incident lists are sorted: smallest first
                }
            }
            if (next < 0) return;
            if (back)
                dq.push_back(next);
            else
                dq.push_front(next);
            on_path.insert(next);
        }
    };
    extend(true);
    extend(false);

    std::vector<Vertex> path(dq.begin(), dq.end());
    for (;;) {
        ClosureResult res = closure(g, path, /*allow_extension=*/true);
        if (!res.extendable) {
            RotationRecord rec;
            rec.path = path;
            rec.fixed_end = path.back();
            rec.derived = std::move(res.derived);
            rec.parent = std::move(res.parent);

            std::vector<Vertex> ns = neighborhood(g, rec.derived);
            SEPSYS_CHECK(ns.size() <= 2 * rec.derived.size(),
                         "|N(S)| exceeds 2|S| after rotation closure");
            std::set<Vertex> pv(path.begin(), path.end());
            for (Vertex s : rec.derived)
                for (auto [w, id] : g.incident(s)) {
                    (void)id;
                    SEPSYS_CHECK(pv.count(w), "derived endpoint has a neighbor off the path");
                }
            return rec;
        }
        // materialize the derived path ending at the extendable endpoint and
        // grow it; the vertex set strictly increases, so this terminates
        RotationRecord tmp;
        tmp.path = path;
        tmp.fixed_end = path.back();
        tmp.parent = std::move(res.parent);
        std::vector<Vertex> grown = tmp.derived_path_to(res.extend_endpoint);
        grown.insert(grown.begin(), res.extend_to);
        on_path.insert(res.extend_to);
        dq.assign(grown.begin(), grown.end());
        extend(false);
        path.assign(dq.begin(), dq.end());
    }
}

ClosureCycle build_closure_cycle(const Graph& g, const RotationRecord& rec) {
    const std::vector<Vertex>& path = rec.path;
    SEPSYS_CHECK(path.size() >= 2, "closure cycle needs a path with an edge");
    std::set<Vertex> in_s(rec.derived.begin(), rec.derived.end());

    // anchor w: vertex closest to the fixed end with a neighbor in S
    Vertex anchor = -1;
    Vertex start = -1;
    for (size_t i = path.size(); i-- > 0;) {
        Vertex w = path[i];
        Vertex best = -1;
        for (auto [x, id] : g.incident(w)) {
            (void)id;
            if (in_s.count(x) && x != w) {
                best = x;
                break;
            }
        }
        if (best >= 0) {
            anchor = w;
            start = best;
            break;
        }
    }
    SEPSYS_CHECK(anchor >= 0, "no path vertex has a neighbor in the derived set");

    std::vector<Vertex> derived_path = rec.derived_path_to(start);

    // the derived path must share the original path's tail from the anchor on
    auto pos_in = [](const std::vector<Vertex>& seq, Vertex v) {
        return std::find(seq.begin(), seq.end(), v) - seq.begin();
    };
    long wp = pos_in(derived_path, anchor);
    long wp_orig = pos_in(path, anchor);
    SEPSYS_CHECK(wp < static_cast<long>(derived_path.size()), "anchor missing from derived path");
    SEPSYS_CHECK(derived_path.size() - wp == path.size() - wp_orig,
                 "derived path tail length mismatch");
    for (long i = wp, j = wp_orig; i < static_cast<long>(derived_path.size()); ++i, ++j)
        SEPSYS_CHECK(derived_path[i] == path[j], "derived path does not preserve the tail");
    SEPSYS_CHECK(wp >= 1, "anchor coincides with the derived endpoint");

    ClosureCycle out;
    out.derived_path = derived_path;
    out.anchor = anchor;
    out.start = start;

    int level = 0;  // caller re-tags
    if (wp == 1) {
        auto id = g.edge_between(start, anchor);
        SEPSYS_CHECK(id.has_value(), "closing edge missing");
        out.element = make_single_edge(g, *id, level, Step::KsSingleton);
    } else {
        std::vector<Vertex> cyc(derived_path.begin(), derived_path.begin() + wp + 1);
        out.element = make_cycle(g, std::move(cyc), level, Step::KsSingleton);
    }

    // containment of S and N(S)
    std::set<Vertex> on_cycle;
    if (out.element.kind() == ElementKind::SingleEdge) {
        on_cycle = {start, anchor};
    } else {
        const auto& w = std::get<CycleWitness>(out.element.witness);
        on_cycle.insert(w.vertices.begin(), w.vertices.end());
    }
    for (Vertex s : rec.derived)
        SEPSYS_CHECK(on_cycle.count(s), "derived vertex missing from closure cycle");
    for (Vertex v : neighborhood(g, rec.derived))
        SEPSYS_CHECK(on_cycle.count(v), "neighborhood vertex missing from closure cycle");
    return out;
}

}  // namespace sepsys

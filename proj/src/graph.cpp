#include "sepsys/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sepsys/errors.hpp"

namespace sepsys {

namespace {

std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

void Graph::index_edges() {
    int cap = 0;
    for (Vertex v : vertices_) cap = std::max(cap, v + 1);
    adj_.assign(cap, {});
    present_.assign(cap, 0);
    for (Vertex v : vertices_) present_[v] = 1;
    for (const Edge& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.id);
        adj_[e.v].emplace_back(e.u, e.id);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph Graph::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
    SEPSYS_REQUIRE(n >= 0, "vertex count must be nonnegative");
    std::vector<Vertex> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    return on_vertices(std::move(verts), pairs);
}

Graph Graph::on_vertices(std::vector<Vertex> verts,
                         std::span<const std::pair<int, int>> pairs) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    SEPSYS_REQUIRE(verts.empty() || verts.front() >= 0, "vertex ids must be nonnegative");

    std::set<std::pair<Vertex, Vertex>> seen;
    Graph g;
    g.vertices_ = std::move(verts);
    for (auto [a, b] : pairs) {
        SEPSYS_REQUIRE(a != b, "loop edge " + std::to_string(a) + "-" + std::to_string(b));
        auto key = ordered(a, b);
        SEPSYS_REQUIRE(std::binary_search(g.vertices_.begin(), g.vertices_.end(), key.first) &&
                           std::binary_search(g.vertices_.begin(), g.vertices_.end(), key.second),
                       "edge endpoint outside vertex set");
        if (!seen.insert(key).second) continue;
        EdgeId id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back({id, key.first, key.second});
    }
    g.index_edges();
    return g;
}

Graph make_graph_with_ids(std::vector<Vertex> verts, std::vector<Edge> edges) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    Graph g;
    g.vertices_ = std::move(verts);
    g.edges_ = std::move(edges);
    g.index_edges();
    return g;
}

bool Graph::has_vertex(Vertex v) const {
    return v >= 0 && v < static_cast<int>(present_.size()) && present_[v];
}

const Edge& Graph::edge(EdgeId id) const {
    const Edge* e = find_edge(id);
    SEPSYS_CHECK(e != nullptr, "unknown edge id " + std::to_string(id));
    return *e;
}

const Edge* Graph::find_edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId x) { return e.id < x; });
    if (it != edges_.end() && it->id == id) return &*it;
    return nullptr;
}

const std::vector<std::pair<Vertex, EdgeId>>& Graph::incident(Vertex v) const {
    static const std::vector<std::pair<Vertex, EdgeId>> empty;
    if (!has_vertex(v)) return empty;
    return adj_[v];
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b)) return std::nullopt;
    const auto& list = adj_[a];
    auto it = std::lower_bound(list.begin(), list.end(), std::pair{b, EdgeId{-1}});
    if (it != list.end() && it->first == b) return it->second;
    return std::nullopt;
}

Graph Graph::edge_subgraph(std::span<const EdgeId> ids) const {
    std::vector<Edge> es;
    std::vector<Vertex> vs;
    for (EdgeId id : ids) {
        const Edge& e = edge(id);
        es.push_back(e);
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    return make_graph_with_ids(std::move(vs), std::move(es));
}

Graph Graph::without_vertices(std::span<const Vertex> verts) const {
    std::vector<char> drop(adj_.size(), 0);
    for (Vertex v : verts)
        if (v >= 0 && v < static_cast<int>(drop.size())) drop[v] = 1;
    std::vector<Vertex> vs;
    for (Vertex v : vertices_)
        if (!drop[v]) vs.push_back(v);
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (!drop[e.u] && !drop[e.v]) es.push_back(e);
    return make_graph_with_ids(std::move(vs), std::move(es));
}

Graph Graph::without_edges(std::span<const EdgeId> ids) const {
    std::set<EdgeId> drop(ids.begin(), ids.end());
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (!drop.count(e.id)) es.push_back(e);
    return make_graph_with_ids(vertices_, std::move(es));
}

bool Graph::connected() const {
    if (vertices_.empty()) return true;
    std::vector<Vertex> stack{vertices_.front()};
    std::set<Vertex> seen{vertices_.front()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (auto [w, id] : incident(v)) {
            (void)id;
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return static_cast<int>(seen.size()) == vertex_count();
}

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    for (Vertex v : g.vertices())
        if (g.degree(v) != 2) return false;
    return g.connected();
}

std::optional<Graph> suppress_degree_two(const Graph& g) {
    SEPSYS_REQUIRE(g.vertex_count() > 0, "suppression of an empty graph");
    // adjacency as sets; simplicity maintained explicitly
    std::map<Vertex, std::set<Vertex>> adj;
    for (Vertex v : g.vertices()) adj[v];
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [v, nb] : adj) {
            if (nb.size() != 2) continue;
            Vertex a = *nb.begin();
            Vertex b = *std::next(nb.begin());
            if (a == b) return std::nullopt;            // loop
            if (adj[a].count(b)) return std::nullopt;   // parallel edge
            adj[a].erase(v);
            adj[b].erase(v);
            adj[a].insert(b);
            adj[b].insert(a);
            adj.erase(v);
            changed = true;
            break;
        }
    }
    std::vector<Vertex> verts;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [v, nb] : adj) {
        verts.push_back(v);
        for (Vertex w : nb)
            if (v < w) pairs.emplace_back(v, w);
    }
    return Graph::on_vertices(std::move(verts), pairs);
}

std::optional<K4Witness> is_k4_subdivision(const Graph& g) {
    if (g.vertex_count() < 4 || !g.connected()) return std::nullopt;
    std::vector<Vertex> branch;
    for (Vertex v : g.vertices()) {
        int d = g.degree(v);
        if (d == 3)
            branch.push_back(v);
        else if (d != 2)
            return std::nullopt;
    }
    if (branch.size() != 4) return std::nullopt;

    std::set<Vertex> is_branch(branch.begin(), branch.end());
    std::set<EdgeId> used;
    std::set<Vertex> interior_seen;
    // walks[i][j] for branch index pairs
    std::map<std::pair<int, int>, std::vector<Vertex>> walks;

    auto branch_index = [&](Vertex v) {
        return static_cast<int>(std::find(branch.begin(), branch.end(), v) - branch.begin());
    };

    for (Vertex b : branch) {
        for (auto [first, id0] : g.incident(b)) {
            if (used.count(id0)) continue;
            std::vector<Vertex> walk{b, first};
            used.insert(id0);
            Vertex prev = b, cur = first;
            while (!is_branch.count(cur)) {
                if (interior_seen.count(cur)) return std::nullopt;
                interior_seen.insert(cur);
                const auto& inc = g.incident(cur);
                Vertex nxt = inc[0].first == prev ? inc[1].first : inc[0].first;
                EdgeId nid = inc[0].first == prev ? inc[1].second : inc[0].second;
                if (used.count(nid)) return std::nullopt;
                used.insert(nid);
                prev = cur;
                cur = nxt;
                walk.push_back(cur);
            }
            if (cur == b) return std::nullopt;  // suppression would create a loop
            int i = branch_index(b), j = branch_index(cur);
            if (i > j) {
                std::reverse(walk.begin(), walk.end());
                std::swap(i, j);
            }
            if (walks.count({i, j})) return std::nullopt;  // parallel after suppression
            walks[{i, j}] = std::move(walk);
        }
    }
    if (walks.size() != 6) return std::nullopt;
    if (static_cast<int>(used.size()) != g.edge_count()) return std::nullopt;

    K4Witness w;
    std::copy(branch.begin(), branch.end(), w.branch.begin());
    static constexpr std::pair<int, int> kPairs[6] = {{0, 1}, {0, 2}, {0, 3},
                                                      {1, 2}, {1, 3}, {2, 3}};
    for (int p = 0; p < 6; ++p) {
        auto it = walks.find(kPairs[p]);
        if (it == walks.end()) return std::nullopt;
        w.paths[p] = it->second;
    }
    return w;
}

std::vector<std::pair<VertexPair, VertexPair>> crossing_pairs(
    std::span<const Vertex> cycle, std::span<const VertexPair> chords) {
    const int n = static_cast<int>(cycle.size());
    SEPSYS_REQUIRE(n >= 3, "crossing_pairs needs a cycle of length >= 3");
    std::map<Vertex, int> pos;
    for (int i = 0; i < n; ++i) pos[cycle[i]] = i;

    auto position = [&](Vertex v) {
        auto it = pos.find(v);
        SEPSYS_REQUIRE(it != pos.end(),
                       "chord endpoint " + std::to_string(v) + " is not on the cycle");
        return it->second;
    };

    std::vector<std::pair<int, int>> cpos;  // chord endpoints as cycle positions, lo < hi
    for (auto [a, b] : chords) {
        int pa = position(a), pb = position(b);
        SEPSYS_REQUIRE(pa != pb, "degenerate chord");
        if (pa > pb) std::swap(pa, pb);
        bool on_cycle = (pb - pa == 1) || (pa == 0 && pb == n - 1);
        SEPSYS_REQUIRE(!on_cycle, "chord coincides with a cycle edge");
        cpos.emplace_back(pa, pb);
    }

    auto strictly_inside = [](int x, int lo, int hi) { return lo < x && x < hi; };
    std::vector<std::pair<VertexPair, VertexPair>> out;
    for (size_t i = 0; i < cpos.size(); ++i) {
        for (size_t j = i + 1; j < cpos.size(); ++j) {
            auto [a1, a2] = cpos[i];
            auto [b1, b2] = cpos[j];
            int inside = strictly_inside(b1, a1, a2) + strictly_inside(b2, a1, a2);
            bool shared = b1 == a1 || b1 == a2 || b2 == a1 || b2 == a2;
            if (!shared && inside == 1) out.emplace_back(chords[i], chords[j]);
        }
    }
    return out;
}

bool outerplanar_edge_bound_ok(int h, long long m) {
    SEPSYS_REQUIRE(h >= 2, "outerplanar bound needs h >= 2");
    return m <= 2LL * h - 3;
}

}  // namespace sepsys

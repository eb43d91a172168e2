#ifndef SEPSYS_TEST_HELPERS_HPP
#define SEPSYS_TEST_HELPERS_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "sepsys/corpus.hpp"
#include "sepsys/graph.hpp"

namespace sepsys::testing {

inline Graph make(int n, std::vector<std::pair<int, int>> pairs) {
    return Graph::from_pairs(n, pairs);
}

inline Graph make_on(std::vector<Vertex> verts, std::vector<std::pair<int, int>> pairs) {
    return Graph::on_vertices(std::move(verts), pairs);
}

// Seeded random connected-ish graph for property tests.
inline Graph random_graph(int n, double p, uint64_t seed) {
    return make(n, gen_gnp(n, p, seed));
}

// Brute-force recognizer: try every choice of four branch vertices and pack
// the six connecting paths by backtracking over internally disjoint,
// edge-disjoint walks that must use up every edge and vertex. Independent of
// the walk-based recognizer in the library.
inline bool brute_force_k4_subdivision(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 4 || g.edge_count() != n + 2) return false;
    const std::vector<Vertex>& vs = g.vertices();

    static constexpr std::pair<int, int> kPairs[6] = {{0, 1}, {0, 2}, {0, 3},
                                                      {1, 2}, {1, 3}, {2, 3}};

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::array<Vertex, 4> branch{vs[a], vs[b], vs[c], vs[d]};
                    std::set<Vertex> used_internal;
                    std::set<EdgeId> used_edges;

                    // find a path branch[pi] -> branch[pj] extending the search
                    auto pack = [&](auto&& self, int pair_idx) -> bool {
                        if (pair_idx == 6)
                            return static_cast<int>(used_edges.size()) == g.edge_count() &&
                                   static_cast<int>(used_internal.size()) == n - 4;
                        auto [pi, pj] = kPairs[pair_idx];
                        Vertex from = branch[pi], to = branch[pj];
                        std::vector<Vertex> stack;
                        // depth-first over simple paths avoiding branch internally
                        auto walk = [&](auto&& wself, Vertex cur) -> bool {
                            for (auto [nxt, id] : g.incident(cur)) {
                                if (used_edges.count(id)) continue;
                                if (nxt == to) {
                                    used_edges.insert(id);
                                    if (self(self, pair_idx + 1)) return true;
                                    used_edges.erase(id);
                                    continue;
                                }
                                bool is_branch =
                                    std::find(branch.begin(), branch.end(), nxt) != branch.end();
                                if (is_branch || used_internal.count(nxt)) continue;
                                used_edges.insert(id);
                                used_internal.insert(nxt);
                                if (wself(wself, nxt)) return true;
                                used_internal.erase(nxt);
                                used_edges.erase(id);
                            }
                            return false;
                        };
                        return walk(walk, from);
                    };
                    if (pack(pack, 0)) return true;
                }
    return false;
}

}  // namespace sepsys::testing

#endif

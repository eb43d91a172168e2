#include "sepsys/verifier.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "sepsys/errors.hpp"

namespace sepsys {

namespace {

class Bitset {
public:
    explicit Bitset(int bits = 0) : words_((bits + 63) / 64, 0) {}
    void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
    void clear(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return words_[i >> 6] >> (i & 63) & 1; }

    // |this \ other|, stopping once `cap` is reached
    int diff_count(const Bitset& other, int cap) const {
        int c = 0;
        for (size_t w = 0; w < words_.size(); ++w) {
            c += std::popcount(words_[w] & ~other.words_[w]);
            if (c >= cap) return cap;
        }
        return c;
    }
    int first_diff(const Bitset& other) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t d = words_[w] & ~other.words_[w];
            if (d) return static_cast<int>(w * 64 + std::countr_zero(d));
        }
        return -1;
    }
    int popcount() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

private:
    std::vector<uint64_t> words_;
};

struct SignatureTable {
    std::vector<EdgeId> ids;        // dense index -> edge id
    std::map<EdgeId, int> index;    // edge id -> dense index
    std::vector<Bitset> sig;        // per edge, bits over elements
    std::vector<int> pc;            // cached popcounts
};

SignatureTable build_signatures(const Graph& g, const SeparatingSystem& sys) {
    SignatureTable t;
    for (const Edge& e : g.edges()) {
        t.index[e.id] = static_cast<int>(t.ids.size());
        t.ids.push_back(e.id);
    }
    const int m = static_cast<int>(t.ids.size());
    const int nel = sys.size();
    t.sig.assign(m, Bitset(nel));
    for (int el = 0; el < nel; ++el)
        for (EdgeId id : sys.elements[el].edges) {
            auto it = t.index.find(id);
            SEPSYS_REQUIRE(it != t.index.end(),
                           "element edge " + std::to_string(id) + " is not in the graph");
            t.sig[it->second].set(el);
        }
    t.pc.resize(m);
    for (int i = 0; i < m; ++i) t.pc[i] = t.sig[i].popcount();
    return t;
}

bool definitional_separates(const Graph& g, const SeparatingSystem& sys, EdgeId a, EdgeId b) {
    (void)g;
    for (const SystemElement& el : sys.elements)
        if (el.contains(a) && !el.contains(b)) return true;
    return false;
}

}  // namespace

SeparationReport verify_separation(const Graph& g, const SeparatingSystem& sys) {
    SignatureTable t = build_signatures(g, sys);
    const int m = static_cast<int>(t.ids.size());

    SeparationReport rep;
    rep.pass = true;
    for (int a = 0; a < m && rep.pass; ++a) {
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            if (t.pc[a] > t.pc[b]) continue;  // a subset of b needs pc(a) <= pc(b)
            if (t.sig[a].diff_count(t.sig[b], 1) == 0) {
                rep.pass = false;
                rep.first_failure = {t.ids[a], t.ids[b]};
                std::ostringstream os;
                os << "edge " << t.ids[a] << " has no element avoiding edge " << t.ids[b]
                   << " (signature sizes " << t.pc[a] << " vs " << t.pc[b] << ")";
                if (t.pc[a] == 0) os << "; edge " << t.ids[a] << " is uncovered";
                rep.detail = os.str();
                break;
            }
        }
    }

    if (m <= 200) {
        // cross-check against the literal definition
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                if (a == b) continue;
                bool sep = definitional_separates(g, sys, t.ids[a], t.ids[b]);
                bool sig_sep = t.sig[a].diff_count(t.sig[b], 1) > 0;
                SEPSYS_CHECK(sep == sig_sep,
                             "signature and definitional separation checks disagree");
            }
    }
    return rep;
}

StructureReport verify_structure(const Graph& g, const SeparatingSystem& sys) {
    StructureReport rep;
    rep.pass = true;

    static constexpr std::pair<int, int> kPairs[6] = {{0, 1}, {0, 2}, {0, 3},
                                                      {1, 2}, {1, 3}, {2, 3}};
    for (int i = 0; i < sys.size(); ++i) {
        const SystemElement& el = sys.elements[i];
        auto fail = [&](const std::string& why) {
            rep.pass = false;
            rep.bad_element = i;
            rep.detail = "element " + std::to_string(i) + ": " + why;
        };
        for (EdgeId id : el.edges)
            SEPSYS_REQUIRE(g.find_edge(id) != nullptr,
                           "element edge " + std::to_string(id) + " is not in the graph");
        if (!std::is_sorted(el.edges.begin(), el.edges.end()) ||
            std::adjacent_find(el.edges.begin(), el.edges.end()) != el.edges.end()) {
            fail("edge list not sorted and unique");
            break;
        }
        if (sys.mode == Mode::CycleOnly && el.kind() == ElementKind::K4Subdivision) {
            fail("subdivision element in a cycle-only system");
            break;
        }
        if (el.kind() == ElementKind::SingleEdge) {
            const auto& w = std::get<EdgeWitness>(el.witness);
            if (el.edges.size() != 1) {
                fail("single edge element with several edges");
                break;
            }
            const Edge& e = g.edge(el.edges[0]);
            if (std::min(w.u, w.v) != e.u || std::max(w.u, w.v) != e.v) {
                fail("edge witness endpoints mismatch");
                break;
            }
        } else if (el.kind() == ElementKind::Cycle) {
            const auto& w = std::get<CycleWitness>(el.witness);
            std::set<Vertex> distinct(w.vertices.begin(), w.vertices.end());
            if (w.vertices.size() < 3 || distinct.size() != w.vertices.size()) {
                fail("cycle witness not a sequence of distinct vertices");
                break;
            }
            std::vector<EdgeId> ids;
            bool ok = true;
            for (size_t p = 0; p < w.vertices.size(); ++p) {
                auto id = g.edge_between(w.vertices[p], w.vertices[(p + 1) % w.vertices.size()]);
                if (!id) {
                    ok = false;
                    break;
                }
                ids.push_back(*id);
            }
            std::sort(ids.begin(), ids.end());
            if (!ok || ids != el.edges) {
                fail("cycle witness does not spell the element's edges");
                break;
            }
        } else {
            const auto& w = std::get<K4Witness>(el.witness);
            std::set<EdgeId> uni;
            bool ok = true;
            for (int p = 0; p < 6 && ok; ++p) {
                const auto& path = w.paths[p];
                auto [bi, bj] = kPairs[p];
                if (path.size() < 2 || path.front() != w.branch[bi] ||
                    path.back() != w.branch[bj]) {
                    ok = false;
                    break;
                }
                for (size_t q = 0; q + 1 < path.size(); ++q) {
                    auto id = g.edge_between(path[q], path[q + 1]);
                    if (!id) {
                        ok = false;
                        break;
                    }
                    uni.insert(*id);
                }
            }
            if (!ok || std::vector<EdgeId>(uni.begin(), uni.end()) != el.edges) {
                fail("subdivision witness does not spell the element's edges");
                break;
            }
            Graph sub = g.edge_subgraph(el.edges);
            auto rec = is_k4_subdivision(sub);
            if (!rec) {
                fail("edge set is not a K4 subdivision");
                break;
            }
            std::set<Vertex> got(rec->branch.begin(), rec->branch.end());
            std::set<Vertex> stored(w.branch.begin(), w.branch.end());
            if (got != stored) {
                fail("branch vertices disagree with the recognizer");
                break;
            }
        }
    }
    return rep;
}

SizeReport verify_size(const Graph& g, const SeparatingSystem& sys) {
    SizeReport rep;
    rep.size = sys.size();
    rep.bound = (sys.mode == Mode::K4 ? 82LL : 41LL) * g.vertex_count();
    rep.pass = rep.size <= rep.bound;
    return rep;
}

bool oracle_no_single_cycle_contains(std::span<const Vertex> cycle,
                                     std::span<const VertexPair> matching) {
    SEPSYS_REQUIRE(cycle.size() >= 3 && cycle.size() <= 24,
                   "exhaustive cycle oracle limited to 3..24 vertices");
    if (matching.empty()) return false;

    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < cycle.size(); ++i)
        pairs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    for (auto [a, b] : matching) pairs.emplace_back(a, b);
    std::vector<Vertex> verts(cycle.begin(), cycle.end());
    Graph g = Graph::on_vertices(verts, pairs);

    std::set<EdgeId> want;
    for (auto [a, b] : matching) {
        auto id = g.edge_between(a, b);
        SEPSYS_CHECK(id.has_value(), "matching edge missing after construction");
        want.insert(*id);
    }

    // enumerate simple cycles: root at the smallest vertex of each cycle,
    // internal vertices strictly larger, one direction per cycle
    std::vector<Vertex> stack;
    std::set<Vertex> on_stack;
    std::set<EdgeId> used;
    bool found = false;

    auto dfs = [&](auto&& self, Vertex root, Vertex v) -> void {
        if (found) return;
        for (auto [w, id] : g.incident(v)) {
            if (found) return;
            if (w == root && stack.size() >= 3) {
                if (stack[1] < v) {  // canonical direction
                    bool superset = true;
                    for (EdgeId e : want)
                        if (!used.count(e) && e != id) {
                            superset = false;
                            break;
                        }
                    if (superset) found = true;
                }
                continue;
            }
            if (w <= root || on_stack.count(w)) continue;
            stack.push_back(w);
            on_stack.insert(w);
            used.insert(id);
            self(self, root, w);
            used.erase(id);
            on_stack.erase(w);
            stack.pop_back();
        }
    };

    for (Vertex root : g.vertices()) {
        if (found) break;
        stack = {root};
        on_stack = {root};
        used.clear();
        dfs(dfs, root, root);
    }
    return !found;
}

std::vector<Vertex> oracle_derived_set(const Graph& g, std::span<const Vertex> path,
                                       Vertex fixed_end) {
    SEPSYS_REQUIRE(path.size() <= 12, "exhaustive rotation oracle limited to 12 vertices");
    SEPSYS_REQUIRE(!path.empty() && path.back() == fixed_end,
                   "path does not end at the fixed vertex");
    std::set<std::vector<Vertex>> seen;
    std::vector<std::vector<Vertex>> queue{{path.begin(), path.end()}};
    seen.insert(queue.front());
    std::set<Vertex> endpoints{path.front()};

    while (!queue.empty()) {
        std::vector<Vertex> seq = std::move(queue.back());
        queue.pop_back();
        std::map<Vertex, size_t> pos;
        for (size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = i;
        for (auto [x, id] : g.incident(seq.front())) {
            (void)id;
            auto it = pos.find(x);
            if (it == pos.end() || it->second < 2) continue;
            std::vector<Vertex> next;
            for (size_t k = it->second; k-- > 0;) next.push_back(seq[k]);
            for (size_t k = it->second; k < seq.size(); ++k) next.push_back(seq[k]);
            if (seen.insert(next).second) {
                endpoints.insert(next.front());
                queue.push_back(std::move(next));
            }
        }
    }
    endpoints.erase(fixed_end);
    return {endpoints.begin(), endpoints.end()};
}

std::vector<int> redundant_elements(const Graph& g, const SeparatingSystem& sys) {
    SignatureTable t = build_signatures(g, sys);
    const int m = static_cast<int>(t.ids.size());
    if (m < 2) return {};  // no ordered pairs exist; every element counts as essential
    std::vector<int> crit(sys.size(), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            if (t.pc[a] - t.pc[b] >= 2) continue;  // difference has at least two elements
            int d = t.sig[a].diff_count(t.sig[b], 2);
            SEPSYS_CHECK(d >= 1, "system does not separate; redundancy undefined");
            if (d == 1) ++crit[t.sig[a].first_diff(t.sig[b])];
        }
    std::vector<int> out;
    for (int el = 0; el < sys.size(); ++el)
        if (crit[el] == 0) out.push_back(el);
    return out;
}

void prune_redundant(const Graph& g, SeparatingSystem& sys) {
    SignatureTable t = build_signatures(g, sys);
    const int m = static_cast<int>(t.ids.size());
    if (m < 2 || sys.size() <= 1) return;

    std::vector<uint16_t> count(static_cast<size_t>(m) * m, 0);
    auto at = [&](int a, int b) -> uint16_t& { return count[static_cast<size_t>(a) * m + b]; };
    std::vector<int> crit(sys.size(), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            int d = t.sig[a].diff_count(t.sig[b], 0x7fff);
            SEPSYS_CHECK(d >= 1, "prune requires a separating system");
            at(a, b) = static_cast<uint16_t>(d);
            if (d == 1) ++crit[t.sig[a].first_diff(t.sig[b])];
        }

    std::vector<char> removed(sys.size(), 0);
    for (int el = sys.size(); el-- > 0;) {
        if (crit[el] != 0) continue;
        removed[el] = 1;
        std::vector<int> members;
        for (int a = 0; a < m; ++a)
            if (t.sig[a].test(el)) members.push_back(a);
        for (int a : members) {
            for (int b = 0; b < m; ++b) {
                if (b == a || t.sig[b].test(el)) continue;
                uint16_t& c = at(a, b);
                SEPSYS_CHECK(c >= 2, "removing a non-critical element broke a pair");
                if (--c == 1) {
                    t.sig[a].clear(el);  // clear before locating the survivor
                    int uniq = t.sig[a].first_diff(t.sig[b]);
                    t.sig[a].set(el);
                    ++crit[uniq];
                }
            }
        }
        for (int a : members) t.sig[a].clear(el);
        for (int a : members) t.pc[a]--;
    }

    std::vector<SystemElement> kept;
    for (int el = 0; el < sys.size(); ++el)
        if (!removed[el]) kept.push_back(std::move(sys.elements[el]));
    sys.elements = std::move(kept);
}

}  // namespace sepsys

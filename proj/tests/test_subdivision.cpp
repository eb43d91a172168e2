#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sepsys/errors.hpp"
#include "sepsys/subdivision.hpp"

using namespace sepsys;
using sepsys::testing::make;
using sepsys::testing::make_on;

namespace {

// labelled cycle 1..n plus extra chords, all vertices 1-based so positions
// along the cycle equal the labels
Graph ring_with(int n, std::vector<std::pair<int, int>> chords) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i) pairs.emplace_back(i, i % n + 1);
    pairs.insert(pairs.end(), chords.begin(), chords.end());
    std::vector<Vertex> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(i);
    return make_on(verts, pairs);
}

CycleOrder full_ring_order(int n) {
    std::vector<Vertex> cyc;
    for (int i = 1; i <= n; ++i) cyc.push_back(i);
    return order_along_cycle(cyc, cyc);
}

EasyMatching matching_with(std::vector<IndexEdge> edges, Slicing slicing, int parity) {
    EasyMatching m;
    m.edges = std::move(edges);
    m.slicing = std::move(slicing);
    m.parity = parity;
    return m;
}

Slicing hand_slicing(std::vector<std::pair<int, int>> bounds) {
    Slicing s;
    s.lo = bounds.front().first;
    s.hi = bounds.back().second;
    s.bounds = std::move(bounds);
    return s;
}

bool element_has(const Graph& g, const SystemElement& el, int a, int b) {
    auto id = g.edge_between(a, b);
    return id && el.contains(*id);
}

}  // namespace

TEST_CASE("classify") {
    Slicing s = hand_slicing({{1, 7}, {8, 18}});
    EasyMatching crowded = matching_with(
        {{1, 8}, {2, 10}, {3, 12}, {5, 16}, {6, 18}}, s, 1);
    CHECK(classify_matching(crowded) == MatchingShape::Jumbled);

    EasyMatching lone = matching_with({{2, 10}}, s, 1);
    CHECK(classify_matching(lone) == MatchingShape::Elementary);

    EasyMatching empty = matching_with({}, s, 1);
    CHECK(classify_matching(empty) == MatchingShape::Elementary);
}

TEST_CASE("reroute golden fixture on the 18-ring") {
    Graph g = ring_with(18, {{1, 8}, {2, 10}, {3, 12}, {5, 16}, {6, 18}});
    CycleOrder ord = full_ring_order(18);
    EasyMatching m = matching_with({{1, 8}, {2, 10}, {3, 12}, {5, 16}, {6, 18}},
                                   hand_slicing({{1, 7}, {8, 18}}), 1);
    REQUIRE(is_easy_matching(m));

    Reroute rr = reroute_cycle(g, ord, m);
    REQUIRE(rr.intervals.size() == 1);
    const RerouteInterval& ri = rr.intervals[0];
    CHECK(ri.w == std::vector<int>{1, 2, 3, 5, 6, 8, 10, 12, 16, 18});
    CHECK(ri.replacement ==
          std::vector<Vertex>{1, 8, 9, 10, 2, 3, 12, 13, 14, 15, 16, 5, 6, 18});
    REQUIRE(ri.removed.size() == 5);
    CHECK(ri.removed[0] == std::vector<Vertex>{1, 2});
    CHECK(ri.removed[1] == std::vector<Vertex>{3, 4, 5});
    CHECK(ri.removed[2] == std::vector<Vertex>{6, 7, 8});
    CHECK(ri.removed[3] == std::vector<Vertex>{10, 11, 12});
    CHECK(ri.removed[4] == std::vector<Vertex>{16, 17, 18});
    CHECK(rr.cycle == ri.replacement);  // the span covers the whole ring body
}

TEST_CASE("single-start interval reroutes to a pure shortcut") {
    Graph g = ring_with(6, {{2, 5}});
    CycleOrder ord = full_ring_order(6);
    EasyMatching m = matching_with({{2, 5}}, hand_slicing({{1, 4}, {5, 6}}), 1);
    REQUIRE(is_easy_matching(m));
    Reroute rr = reroute_cycle(g, ord, m);
    REQUIRE(rr.intervals.size() == 1);
    CHECK(rr.intervals[0].replacement == std::vector<Vertex>{2, 5});
    CHECK(rr.cycle == std::vector<Vertex>{1, 2, 5, 6});
}

TEST_CASE("replacement endpoints always match the spanned segment ends") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Rng rng(seed * 67);
        int n = 10 + rng.below(14);
        // one crowded interval with an odd number of pairwise crossing chords
        int s = 3 + 2 * rng.below(2);  // 3 or 5
        if (2 * s + 2 > n) s = 3;
        std::vector<IndexEdge> edges;
        std::vector<std::pair<int, int>> chords;
        for (int i = 0; i < s; ++i) {
            edges.push_back({2 + i, 2 + s + i + 1});
            chords.emplace_back(2 + i, 2 + s + i + 1);
        }
        Graph g = ring_with(n, chords);
        CycleOrder ord = full_ring_order(n);
        EasyMatching m = matching_with(
            edges, hand_slicing({{1, 2 + s}, {3 + s, n}}), 1);
        CAPTURE(seed);
        REQUIRE(is_easy_matching(m));
        Reroute rr = reroute_cycle(g, ord, m);
        for (const RerouteInterval& ri : rr.intervals) {
            CHECK(ri.replacement.front() == ord.at(ri.w.front()));
            CHECK(ri.replacement.back() == ord.at(ri.w.back()));
        }
    }
}

TEST_CASE("jumbled fixture builds the expected subdivision") {
    Graph g = ring_with(18, {{1, 8}, {2, 10}, {3, 12}, {5, 16}, {6, 18}});
    Backbone bb{full_ring_order(18), std::nullopt, std::nullopt};
    EasyMatching m = matching_with({{1, 8}, {2, 10}, {3, 12}, {5, 16}, {6, 18}},
                                   hand_slicing({{1, 7}, {8, 18}}), 1);
    SystemElement el = build_jumbled_element(g, bb, m, 0);
    REQUIRE(el.kind() == ElementKind::K4Subdivision);
    const auto& w = std::get<K4Witness>(el.witness);
    CHECK(w.branch == std::array<Vertex, 4>{1, 2, 10, 12});
    for (auto [a, b] : {std::pair{1, 8}, {2, 10}, {3, 12}, {5, 16}, {6, 18}})
        CHECK(element_has(g, el, a, b));
    // restored segments are back
    CHECK(element_has(g, el, 1, 2));
    CHECK(element_has(g, el, 10, 11));
    CHECK(element_has(g, el, 11, 12));
    // dropped rail vertices stay out
    for (Vertex v : {4, 7, 17}) {
        Graph sub = g.edge_subgraph(el.edges);
        CHECK_FALSE(sub.has_vertex(v));
    }
}

TEST_CASE("cycle-mode element on the jumbled fixture") {
    Graph g = ring_with(18, {{1, 8}, {2, 10}, {3, 12}, {5, 16}, {6, 18}});
    CycleOrder ord = full_ring_order(18);
    EasyMatching m = matching_with({{1, 8}, {2, 10}, {3, 12}, {5, 16}, {6, 18}},
                                   hand_slicing({{1, 7}, {8, 18}}), 1);
    SystemElement el = build_cycle_element(g, ord, m, 0);
    REQUIRE(el.kind() == ElementKind::Cycle);
    for (auto [a, b] : {std::pair{1, 8}, {2, 10}, {3, 12}, {5, 16}, {6, 18}})
        CHECK(element_has(g, el, a, b));
}

TEST_CASE("difference-4 chords on the 18-ring split into parts that reroute") {
    std::vector<std::pair<int, int>> chords;
    for (int i : {2, 3, 4, 5, 10, 11, 12, 13}) chords.emplace_back(i, i + 4);
    Graph g = ring_with(18, chords);
    CycleOrder ord = full_ring_order(18);
    std::vector<IndexEdge> edges;
    for (auto [a, b] : chords) edges.push_back({a, b});

    auto parts = refine_class(Family::Gap, 4, edges, 18);
    REQUIRE(parts.size() == 2);
    size_t covered = 0;
    for (const EasyMatching& m : parts) {
        SystemElement el = build_cycle_element(g, ord, m, 0);
        REQUIRE(el.kind() == ElementKind::Cycle);
        for (const IndexEdge& e : m.edges) CHECK(element_has(g, el, e.start, e.end));
        covered += m.edges.size();
    }
    CHECK(covered == edges.size());
}

TEST_CASE("elementary: plain shortcut") {
    Graph g = ring_with(8, {{1, 4}, {2, 6}, {6, 8}});
    Backbone bb{full_ring_order(8), IndexEdge{1, 4}, IndexEdge{2, 6}};
    EasyMatching m = matching_with({{6, 8}}, uniform_slicing(8, 2), 1);
    REQUIRE(is_easy_matching(m));
    auto els = build_elementary_elements(g, bb, m, 0);
    REQUIRE(els.size() == 1);
    REQUIRE(els[0].kind() == ElementKind::K4Subdivision);
    CHECK(element_has(g, els[0], 6, 8));
    CHECK_FALSE(element_has(g, els[0], 6, 7));  // shortcut removed the arc
    CHECK_FALSE(element_has(g, els[0], 7, 8));
    CHECK(element_has(g, els[0], 1, 4));
    CHECK(element_has(g, els[0], 2, 6));
}

TEST_CASE("elementary: an edge spanning both chords is emitted alone") {
    Graph g = ring_with(10, {{2, 5}, {3, 7}, {1, 9}});
    Backbone bb{full_ring_order(10), IndexEdge{2, 5}, IndexEdge{3, 7}};
    EasyMatching m = matching_with({{1, 9}}, uniform_slicing(10, 8), 1);
    REQUIRE(is_easy_matching(m));
    auto els = build_elementary_elements(g, bb, m, 0);
    REQUIRE(els.size() == 1);
    CHECK(els[0].kind() == ElementKind::SingleEdge);
    CHECK(element_has(g, els[0], 1, 9));
}

TEST_CASE("elementary: crossing edge replaces a chord") {
    Graph g = ring_with(10, {{2, 5}, {3, 7}, {4, 8}});
    Backbone bb{full_ring_order(10), IndexEdge{2, 5}, IndexEdge{3, 7}};
    EasyMatching m = matching_with({{4, 8}}, uniform_slicing(10, 4), 1);
    REQUIRE(is_easy_matching(m));
    auto els = build_elementary_elements(g, bb, m, 0);
    REQUIRE(els.size() == 1);
    REQUIRE(els[0].kind() == ElementKind::K4Subdivision);
    CHECK(element_has(g, els[0], 4, 8));
    CHECK(element_has(g, els[0], 2, 5));       // the crossed chord stays
    CHECK_FALSE(element_has(g, els[0], 3, 7));  // the other chord is unused
}

TEST_CASE("elementary: two edges crossing the same chord") {
    Graph g = ring_with(12, {{3, 8}, {5, 10}, {2, 4}, {7, 9}});
    Backbone bb{full_ring_order(12), IndexEdge{3, 8}, IndexEdge{5, 10}};
    EasyMatching m = matching_with({{2, 4}, {7, 9}},
                                   hand_slicing({{1, 2}, {3, 4}, {5, 7}, {8, 12}}), 1);
    REQUIRE(is_easy_matching(m));
    REQUIRE(classify_matching(m) == MatchingShape::Elementary);
    auto els = build_elementary_elements(g, bb, m, 0);
    REQUIRE(els.size() == 2);
    CHECK(els[0].kind() == ElementKind::K4Subdivision);
    CHECK(element_has(g, els[0], 2, 4));
    CHECK(els[1].kind() == ElementKind::SingleEdge);
    CHECK(element_has(g, els[1], 7, 9));
}

TEST_CASE("elementary: crossing edge plus a far shortcut") {
    Graph g = ring_with(14, {{3, 8}, {5, 10}, {2, 4}, {11, 13}});
    Backbone bb{full_ring_order(14), IndexEdge{3, 8}, IndexEdge{5, 10}};
    EasyMatching m = matching_with({{2, 4}, {11, 13}},
                                   hand_slicing({{1, 2}, {3, 4}, {5, 11}, {12, 14}}), 1);
    REQUIRE(is_easy_matching(m));
    auto els = build_elementary_elements(g, bb, m, 0);
    REQUIRE(els.size() == 1);
    REQUIRE(els[0].kind() == ElementKind::K4Subdivision);
    CHECK(element_has(g, els[0], 2, 4));
    CHECK(element_has(g, els[0], 11, 13));
    CHECK_FALSE(element_has(g, els[0], 11, 12));
    CHECK_FALSE(element_has(g, els[0], 12, 13));
}

TEST_CASE("jumbled input rejected by the elementary builder") {
    Graph g = ring_with(18, {{1, 8}, {2, 10}, {3, 12}, {5, 16}, {6, 18}});
    Backbone bb{full_ring_order(18), IndexEdge{1, 8}, IndexEdge{2, 10}};
    EasyMatching m = matching_with({{1, 8}, {2, 10}, {3, 12}, {5, 16}, {6, 18}},
                                   hand_slicing({{1, 7}, {8, 18}}), 1);
    CHECK_THROWS_AS(build_elementary_elements(g, bb, m, 0), invariant_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sepsys/engine.hpp"
#include "sepsys/verifier.hpp"

using namespace sepsys;
using sepsys::testing::make;

namespace {

void check_certified(const Graph& g, const SeparatingSystem& sys) {
    CHECK(verify_structure(g, sys).pass);
    auto sep = verify_separation(g, sys);
    CAPTURE(sep.detail);
    CHECK(sep.pass);
    CHECK(verify_size(g, sys).pass);
}

}  // namespace

TEST_CASE("trivial graphs") {
    SUBCASE("empty graph yields an empty system") {
        Graph g = make(0, {});
        for (Mode mode : {Mode::K4, Mode::CycleOnly}) {
            auto sys = build_separating_system(g, mode);
            CHECK(sys.size() == 0);
            check_certified(g, sys);
        }
    }
    SUBCASE("edgeless graph yields an empty system") {
        Graph g = make(5, {});
        auto sys = build_separating_system(g, Mode::K4);
        CHECK(sys.size() == 0);
    }
    SUBCASE("a single edge yields exactly that edge") {
        Graph g = make(2, {{0, 1}});
        for (Mode mode : {Mode::K4, Mode::CycleOnly}) {
            auto sys = build_separating_system(g, mode);
            REQUIRE(sys.size() == 1);
            CHECK(sys.elements[0].kind() == ElementKind::SingleEdge);
            check_certified(g, sys);
        }
    }
}

TEST_CASE("small complete graphs in both modes") {
    for (int n : {3, 4, 5, 6, 8}) {
        Graph g = make(n, gen_complete(n));
        for (Mode mode : {Mode::K4, Mode::CycleOnly}) {
            CAPTURE(n);
            auto res = build_separating_system_traced(g, mode, {});
            check_certified(g, res.system);
            if (mode == Mode::CycleOnly)
                for (const auto& el : res.system.elements)
                    CHECK(el.kind() != ElementKind::K4Subdivision);
        }
    }
}

TEST_CASE("mode constraint and provenance accounting") {
    Graph g = make(16, gen_gnp(16, 0.4, 21));
    auto res = build_separating_system_traced(g, Mode::K4, {});
    check_certified(g, res.system);

    auto reports = level_accounting(res.system);
    CHECK(reports.size() == res.system.levels.size());
    int total = 0;
    for (const auto& r : reports) total += r.total;
    CHECK(total == res.system.size());

    // every level's emitted count matches what the trace recorded
    for (const auto& li : res.system.levels) {
        CHECK(li.closure_size > 0);
        CHECK(li.h <= 3 * li.closure_size);
        CHECK(li.neighborhood_size <= 2 * li.closure_size);
        CHECK(li.matching_parts <= 12 * li.h);
    }
}

TEST_CASE("disconnected graphs peel one component at a time") {
    // two triangles and an isolated vertex
    Graph g = make(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    for (Mode mode : {Mode::K4, Mode::CycleOnly}) {
        auto sys = build_separating_system(g, mode);
        check_certified(g, sys);
    }
}

TEST_CASE("gap and skew classes always distinguish distinct chords") {
    // end-start and end-2*start coincide only for equal index pairs
    for (int i = 1; i <= 40; ++i)
        for (int j = i + 1; j <= 40; ++j)
            for (int i2 = 1; i2 <= 40; ++i2) {
                int j2 = (j - i) + i2;                      // same gap
                if (j2 - 2 * i2 != j - 2 * i) continue;     // same skew
                if (j2 <= i2 || j2 > 40) continue;
                CHECK(i == i2);
                CHECK(j == j2);
            }
}

TEST_CASE("random corpus in both modes, pruned and unpruned") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 6 + static_cast<int>(seed % 15);
        double p = 0.2 + 0.15 * static_cast<double>(seed % 4);
        Graph g = sepsys::testing::random_graph(n, p, seed * 1277);
        for (Mode mode : {Mode::K4, Mode::CycleOnly}) {
            CAPTURE(seed);
            CAPTURE(n);
            EngineOptions keep;
            keep.prune = false;
            auto raw = build_separating_system_traced(g, mode, keep);
            check_certified(g, raw.system);
            auto pruned = build_separating_system_traced(g, mode, {});
            check_certified(g, pruned.system);
            CHECK(pruned.system.size() <= raw.system.size());
            // generated matchings are easy and within the per-level budget
            for (const auto& tr : pruned.trace) {
                for (const auto& m : tr.matchings) CHECK(is_easy_matching(m));
            }
        }
    }
}

TEST_CASE("hypercube and grid") {
    Graph q3 = make(8, gen_hypercube(3));
    Graph grid = make(16, gen_grid(4, 4));
    for (Mode mode : {Mode::K4, Mode::CycleOnly}) {
        auto s1 = build_separating_system(q3, mode);
        check_certified(q3, s1);
        auto s2 = build_separating_system(grid, mode);
        check_certified(grid, s2);
    }
}

TEST_CASE("determinism: same graph, same certificate") {
    Graph g = make(12, gen_gnp(12, 0.5, 5));
    auto a = build_separating_system(g, Mode::K4);
    auto b = build_separating_system(g, Mode::K4);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) {
        CHECK(a.elements[i].edges == b.elements[i].edges);
        CHECK(a.elements[i].step == b.elements[i].step);
    }
}

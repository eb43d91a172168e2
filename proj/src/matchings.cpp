#include "sepsys/matchings.hpp"

#include <algorithm>
#include <set>

#include "sepsys/errors.hpp"

namespace sepsys {

bool index_edges_cross(const IndexEdge& a, const IndexEdge& b) {
    return (a.start < b.start && b.start < a.end && a.end < b.end) ||
           (b.start < a.start && a.start < b.end && b.end < a.end);
}

int Slicing::interval_of(int pos) const {
    SEPSYS_CHECK(pos >= lo && pos <= hi, "position outside the sliced range");
    for (int r = 1; r <= interval_count(); ++r) {
        auto [a, b] = interval(r);
        if (pos >= a && pos <= b) return r;
    }
    SEPSYS_CHECK(false, "slicing does not cover position " + std::to_string(pos));
    return -1;
}

int CycleOrder::position_of(Vertex v) const {
    auto it = std::find(order.begin(), order.end(), v);
    SEPSYS_CHECK(it != order.end(), "vertex not in the cycle order");
    return static_cast<int>(it - order.begin()) + 1;
}

CycleOrder order_along_cycle(std::span<const Vertex> cycle, std::span<const Vertex> subset) {
    SEPSYS_REQUIRE(cycle.size() >= 2, "cycle order needs at least two vertices");
    SEPSYS_REQUIRE(!subset.empty(), "cycle order needs a nonempty subset");
    std::set<Vertex> want(subset.begin(), subset.end());
    for (Vertex v : want) {
        bool on = std::find(cycle.begin(), cycle.end(), v) != cycle.end();
        SEPSYS_CHECK(on, "subset vertex " + std::to_string(v) + " is off the cycle");
    }
    Vertex smallest = *want.begin();
    size_t at = static_cast<size_t>(
        std::find(cycle.begin(), cycle.end(), smallest) - cycle.begin());

    CycleOrder out;
    out.cycle.reserve(cycle.size());
    for (size_t i = 0; i < cycle.size(); ++i)
        out.cycle.push_back(cycle[(at + i) % cycle.size()]);
    for (size_t i = 0; i < out.cycle.size(); ++i)
        if (want.count(out.cycle[i])) {
            out.order.push_back(out.cycle[i]);
            out.cycle_pos.push_back(static_cast<int>(i));
        }
    return out;
}

std::map<int, std::vector<IndexEdge>> gap_classes(std::span<const IndexEdge> edges, int h) {
    std::map<int, std::vector<IndexEdge>> out;
    for (const IndexEdge& e : edges) {
        SEPSYS_CHECK(1 <= e.start && e.start < e.end && e.end <= h, "index edge out of range");
        out[e.end - e.start].push_back(e);
    }
    for (auto& [k, es] : out) {
        SEPSYS_CHECK(k >= 1 && k <= h - 1, "gap class key out of range");
        std::sort(es.begin(), es.end());
        // linear forest: every index has degree <= 2 and chains never close
        std::map<int, int> deg;
        for (const IndexEdge& e : es) {
            SEPSYS_CHECK(++deg[e.start] <= 2, "gap class not a linear forest");
            SEPSYS_CHECK(++deg[e.end] <= 2, "gap class not a linear forest");
        }
    }
    return out;
}

std::map<int, std::vector<IndexEdge>> skew_classes(std::span<const IndexEdge> edges, int h) {
    std::map<int, std::vector<IndexEdge>> out;
    for (const IndexEdge& e : edges) {
        SEPSYS_CHECK(1 <= e.start && e.start < e.end && e.end <= h, "index edge out of range");
        out[e.end - 2 * e.start].push_back(e);
    }
    for (auto& [k, es] : out) {
        SEPSYS_CHECK(k >= -h + 2 && k <= h - 2, "skew class key out of range");
        std::sort(es.begin(), es.end());
        std::map<int, int> deg;
        for (const IndexEdge& e : es) {
            SEPSYS_CHECK(++deg[e.start] <= 2, "skew class not a linear forest");
            SEPSYS_CHECK(++deg[e.end] <= 2, "skew class not a linear forest");
        }
    }
    return out;
}

Slicing uniform_slicing(int h, int k) {
    SEPSYS_REQUIRE(h >= 1 && k >= 1 && k <= h, "uniform slicing needs 1 <= k <= h");
    Slicing s;
    s.lo = 1;
    s.hi = h;
    for (int a = 1; a <= h; a += k) s.bounds.emplace_back(a, std::min(a + k - 1, h));
    return s;
}

Slicing geometric_slicing(int h, int k) {
    SEPSYS_REQUIRE(h >= 2 && k >= -h + 2 && k <= h - 2,
                   "geometric slicing needs -h+2 <= k <= h-2");
    long long a = k >= 0 ? 1 : 1 - k;
    Slicing s;
    s.lo = static_cast<int>(a);
    s.hi = h;
    SEPSYS_CHECK(a <= h, "slicing start beyond range");
    for (;;) {
        long long next = 2 * a + k;
        SEPSYS_CHECK(next > a && a > -k, "geometric slicing failed to grow");
        if (next > h) {
            s.bounds.emplace_back(static_cast<int>(a), h);
            break;
        }
        s.bounds.emplace_back(static_cast<int>(a), static_cast<int>(next - 1));
        a = next;
    }
    return s;
}

std::array<std::vector<IndexEdge>, 2> split_by_parity(std::span<const IndexEdge> edges,
                                                      const Slicing& slicing) {
    std::array<std::vector<IndexEdge>, 2> out;
    for (const IndexEdge& e : edges) {
        int r = slicing.interval_of(e.start);
        out[r % 2].push_back(e);
    }
    for (auto& part : out) std::sort(part.begin(), part.end());
    return out;
}

std::array<std::vector<IndexEdge>, 2> split_zero_or_odd(std::span<const IndexEdge> edges,
                                                        const Slicing& slicing) {
    std::map<int, std::vector<IndexEdge>> by_interval;
    for (const IndexEdge& e : edges) by_interval[slicing.interval_of(e.start)].push_back(e);
    std::array<std::vector<IndexEdge>, 2> out;
    for (auto& [r, es] : by_interval) {
        std::sort(es.begin(), es.end());
        if (es.size() % 2 == 0 && !es.empty()) {
            out[1].push_back(es.back());  // demote the largest start
            es.pop_back();
        }
        out[0].insert(out[0].end(), es.begin(), es.end());
    }
    for (auto& part : out) std::sort(part.begin(), part.end());
    return out;
}

bool is_easy_matching(const EasyMatching& m) {
    const Slicing& sl = m.slicing;
    // matching: all endpoints distinct
    std::set<int> ends;
    for (const IndexEdge& e : m.edges) {
        if (e.start >= e.end) return false;
        if (!ends.insert(e.start).second) return false;
        if (!ends.insert(e.end).second) return false;
    }
    // (a) starts in intervals of parity t, ends in the following interval
    for (const IndexEdge& e : m.edges) {
        if (e.start < sl.lo || e.end > sl.hi) return false;
        int r = sl.interval_of(e.start);
        if (r % 2 != m.parity % 2) return false;
        if (r + 1 > sl.interval_count()) return false;
        if (sl.interval_of(e.end) != r + 1) return false;
    }
    // (b) same-interval starts pairwise crossing
    std::map<int, std::vector<IndexEdge>> by_interval;
    for (const IndexEdge& e : m.edges) by_interval[sl.interval_of(e.start)].push_back(e);
    for (const auto& [r, es] : by_interval) {
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j)
                if (!index_edges_cross(es[i], es[j])) return false;
    }
    // (c) per-interval start counts zero or odd
    for (const auto& [r, es] : by_interval)
        if (es.size() % 2 == 0 && !es.empty()) return false;
    return true;
}

std::vector<EasyMatching> refine_class(Family family, int k,
                                       std::span<const IndexEdge> edges, int h) {
    Slicing sl = family == Family::Gap ? uniform_slicing(h, k) : geometric_slicing(h, k);
    std::vector<EasyMatching> out;
    auto by_parity = split_by_parity(edges, sl);
    for (int t = 0; t < 2; ++t) {
        auto by_odd = split_zero_or_odd(by_parity[t], sl);
        for (int rho = 0; rho < 2; ++rho) {
            if (by_odd[rho].empty()) continue;
            EasyMatching m;
            m.edges = std::move(by_odd[rho]);
            m.slicing = sl;
            m.parity = t;
            m.split = rho;
            m.family = family;
            m.k = k;
            SEPSYS_CHECK(is_easy_matching(m),
                         "refinement produced a non-easy matching (family "
                         + std::string(family == Family::Gap ? "gap" : "skew")
                         + ", k=" + std::to_string(k) + ")");
            out.push_back(std::move(m));
        }
    }
    return out;
}

}  // namespace sepsys

#ifndef SEPSYS_MATCHINGS_HPP
#define SEPSYS_MATCHINGS_HPP

#include <array>
#include <map>
#include <span>
#include <vector>

#include "sepsys/graph.hpp"
#include "sepsys/system.hpp"

namespace sepsys {

// All arithmetic in this module runs on 1-based positions along the backbone
// cycle, never on raw vertex ids.
struct IndexEdge {
    int start, end;  // start < end

    friend bool operator==(const IndexEdge&, const IndexEdge&) = default;
    friend auto operator<=>(const IndexEdge&, const IndexEdge&) = default;
};

// start < a.start < end < a.end or the mirror image: the chords interleave.
bool index_edges_cross(const IndexEdge& a, const IndexEdge& b);

// Consecutive integer intervals partitioning [lo, hi].
struct Slicing {
    int lo = 1, hi = 0;
    std::vector<std::pair<int, int>> bounds;  // inclusive, consecutive

    int interval_count() const { return static_cast<int>(bounds.size()); }
    std::pair<int, int> interval(int r) const { return bounds.at(r - 1); }  // 1-based
    int interval_of(int pos) const;                                         // 1-based
};

// H-vertices in cyclic order along the backbone, starting at the smallest.
struct CycleOrder {
    std::vector<Vertex> cycle;      // rotated so cycle[0] is the smallest H-vertex
    std::vector<Vertex> order;      // v_1..v_h; order[i-1] is position i
    std::vector<int> cycle_pos;     // position of order[i] in `cycle`, strictly increasing

    int h() const { return static_cast<int>(order.size()); }
    Vertex at(int pos) const { return order.at(pos - 1); }  // 1-based
    int position_of(Vertex v) const;                        // 1-based
};

// Orders the given vertices along the cycle. Every vertex of `subset` must
// lie on the cycle; a two-vertex "cycle" (a single edge) is accepted.
CycleOrder order_along_cycle(std::span<const Vertex> cycle, std::span<const Vertex> subset);

enum class Family { Gap, Skew };  // keyed by end-start, resp. end-2*start

// Partition into classes of equal difference k = end - start, k in [1, h-1].
// Each class is a linear forest.
std::map<int, std::vector<IndexEdge>> gap_classes(std::span<const IndexEdge> edges, int h);
// Partition into classes of equal k = end - 2*start, k in [-h+2, h-2].
std::map<int, std::vector<IndexEdge>> skew_classes(std::span<const IndexEdge> edges, int h);

// Slicing of [1, h] into intervals of size k (last one possibly shorter).
Slicing uniform_slicing(int h, int k);
// Slicing of [a_1, h] with a_{r+1} = 2 a_r + k, a_1 = 1 for k >= 0 else 1-k.
Slicing geometric_slicing(int h, int k);

// Splits by the parity of the interval hosting each edge's start. Output t
// holds the edges starting in intervals with index == t (mod 2).
std::array<std::vector<IndexEdge>, 2> split_by_parity(std::span<const IndexEdge> edges,
                                                      const Slicing& slicing);

// Makes every per-interval start count zero or odd: an interval with an even
// positive count demotes its largest start to the second output.
std::array<std::vector<IndexEdge>, 2> split_zero_or_odd(std::span<const IndexEdge> edges,
                                                        const Slicing& slicing);

struct EasyMatching {
    std::vector<IndexEdge> edges;  // sorted by start
    Slicing slicing;
    int parity = 0;  // t
    int split = 0;   // rho
    Family family = Family::Gap;
    int k = 0;
};

// The three defining properties: starts in intervals of the right parity with
// ends in the next interval, same-interval starts pairwise crossing, and
// per-interval start counts zero or odd; plus matching-ness.
bool is_easy_matching(const EasyMatching& m);

// Full refinement of one class into at most four easy matchings (empty parts
// are dropped).
std::vector<EasyMatching> refine_class(Family family, int k,
                                       std::span<const IndexEdge> edges, int h);

}  // namespace sepsys

#endif

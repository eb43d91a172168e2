#ifndef SEPSYS_VERIFIER_HPP
#define SEPSYS_VERIFIER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepsys/system.hpp"

namespace sepsys {

struct SeparationReport {
    bool pass = false;
    // first ordered pair (e, f) with no element containing e and not f
    std::optional<std::pair<EdgeId, EdgeId>> first_failure;
    std::string detail;
};

// Strong separation, checked from first principles. For each edge its
// membership signature (bitset over elements) is computed; the ordered pair
// (e, f) is separated exactly when sig(e) is not a subset of sig(f), so the
// system separates iff the signatures form an antichain under inclusion.
// Distinct signatures plus full coverage are necessary but not sufficient: a
// strictly contained signature has both, yet its pair fails. For graphs with
// at most 200 edges the quadratic definitional scan is run as well and the
// two answers are required to agree.
SeparationReport verify_separation(const Graph& g, const SeparatingSystem& sys);

struct StructureReport {
    bool pass = false;
    int bad_element = -1;
    std::string detail;
};

// Every element satisfies its kind's predicate (witness consistent with the
// edge set, cycles are cycles, subdivisions pass the recognizer) and cycle
// mode contains no subdivision elements. Provenance is never consulted.
StructureReport verify_structure(const Graph& g, const SeparatingSystem& sys);

struct SizeReport {
    bool pass = false;
    int size = 0;
    long long bound = 0;
};

// size <= 82 n in K4 mode, 41 n in cycle mode.
SizeReport verify_size(const Graph& g, const SeparatingSystem& sys);

// Exhaustive check that no single cycle of cycle+matching contains the whole
// matching. Convention: an empty matching returns false (the cycle itself
// contains all zero of its edges). Limited to 24 vertices.
bool oracle_no_single_cycle_contains(std::span<const Vertex> cycle,
                                     std::span<const VertexPair> matching);

// Exhaustive closure over all exchange sequences, deduplicating whole paths.
// Limited to paths of 12 vertices.
std::vector<Vertex> oracle_derived_set(const Graph& g, std::span<const Vertex> path,
                                       Vertex fixed_end);

// Indices of elements whose removal keeps the system strongly separating,
// i.e. elements that are the sole separator of no ordered pair.
std::vector<int> redundant_elements(const Graph& g, const SeparatingSystem& sys);

// Drops redundant elements (scanning from the back) until every remaining
// element is the sole separator of some ordered pair. Assumes the input
// system verifies.
void prune_redundant(const Graph& g, SeparatingSystem& sys);

}  // namespace sepsys

#endif

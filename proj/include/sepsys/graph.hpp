#ifndef SEPSYS_GRAPH_HPP
#define SEPSYS_GRAPH_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sepsys {

using Vertex = int;
using EdgeId = int;

// An undirected edge with a stable identifier. Endpoints are stored with u < v.
struct Edge {
    EdgeId id;
    Vertex u, v;

    Vertex other(Vertex w) const { return w == u ? v : u; }
};

// Simple undirected graph over an explicit vertex set. Vertex ids are small
// nonnegative integers but need not be contiguous: subgraphs keep the ids of
// the graph they were cut from, and edge ids are stable under extraction.
class Graph {
public:
    Graph() = default;

    // Vertices 0..n-1; loops rejected, duplicate pairs merged.
    static Graph from_pairs(int n, std::span<const std::pair<int, int>> pairs);

    // Explicit vertex set (sorted internally).
    static Graph on_vertices(std::vector<Vertex> verts,
                             std::span<const std::pair<int, int>> pairs);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(Vertex v) const;
    const Edge& edge(EdgeId id) const;
    const Edge* find_edge(EdgeId id) const;  // nullptr when absent

    // Neighbors of v with the connecting edge id, sorted by neighbor.
    const std::vector<std::pair<Vertex, EdgeId>>& incident(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
    std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;

    // Subgraph spanned by the given edges; vertex set = their endpoints.
    // Edge ids are preserved.
    Graph edge_subgraph(std::span<const EdgeId> ids) const;
    // Remove the given vertices and all incident edges.
    Graph without_vertices(std::span<const Vertex> verts) const;
    // Remove the given edges, keeping the vertex set.
    Graph without_edges(std::span<const EdgeId> ids) const;

    bool connected() const;

private:
    std::vector<Vertex> vertices_;  // sorted
    std::vector<Edge> edges_;       // sorted by id
    // adjacency indexed by vertex id; empty slots for absent vertices
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj_;
    std::vector<char> present_;

    void index_edges();
    friend Graph make_graph_with_ids(std::vector<Vertex>, std::vector<Edge>);
};

// Internal helper used by subgraph operations (ids supplied by caller).
Graph make_graph_with_ids(std::vector<Vertex> verts, std::vector<Edge> edges);

// True iff g is a single cycle: connected and 2-regular.
bool is_cycle_graph(const Graph& g);

// Repeatedly delete a degree-2 vertex, joining its neighbors. Returns the
// suppressed graph, or nullopt if a step would create a loop or a parallel
// edge (the input is then not a subdivision of a simple graph).
std::optional<Graph> suppress_degree_two(const Graph& g);

struct K4Witness {
    std::array<Vertex, 4> branch;
    // Paths between branch pairs in the order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3),
    // each listed from the smaller branch vertex and including both ends.
    std::array<std::vector<Vertex>, 6> paths;
};

// Recognizer: connected, exactly four vertices of degree 3, the rest of
// degree 2, and the six branch-to-branch walks are internally disjoint and
// join distinct pairs. Returns the witness on success.
std::optional<K4Witness> is_k4_subdivision(const Graph& g);

// Chords a and b of a cycle cross when b's endpoints lie in distinct
// components of the cycle minus a's endpoints.
using VertexPair = std::pair<Vertex, Vertex>;
std::vector<std::pair<VertexPair, VertexPair>> crossing_pairs(
    std::span<const Vertex> cycle, std::span<const VertexPair> chords);

// Edge bound satisfied by every outerplanar graph: m <= 2h - 3.
bool outerplanar_edge_bound_ok(int h, long long m);

}  // namespace sepsys

#endif

#ifndef SEPSYS_EDGE_LIST_HPP
#define SEPSYS_EDGE_LIST_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sepsys/graph.hpp"

namespace sepsys {

// A graph with the labels it was read with. Vertices are compacted to dense
// ids 0..n-1 in sorted label order (numeric when every label parses as a
// nonnegative integer, lexicographic otherwise); edge ids follow first
// occurrence. labels[i] is the original name of dense vertex i.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;
};

LabeledGraph from_edge_list(const std::vector<std::pair<std::string, std::string>>& pairs);
LabeledGraph from_edge_list(const std::vector<std::pair<int, int>>& pairs);

// Text format: one edge per line, two whitespace-separated labels; lines
// starting with '#' are ignored.
LabeledGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const std::vector<std::pair<int, int>>& pairs);

}  // namespace sepsys

#endif

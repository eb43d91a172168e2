#include "sepsys/edge_list.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "sepsys/errors.hpp"

namespace sepsys {

namespace {

bool numeric_label(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

LabeledGraph from_edge_list(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::string> labels;
    for (const auto& [a, b] : pairs) {
        labels.push_back(a);
        labels.push_back(b);
    }
    const bool numeric = std::all_of(labels.begin(), labels.end(), numeric_label);
    std::sort(labels.begin(), labels.end(), [&](const std::string& x, const std::string& y) {
        if (numeric) return std::stoll(x) < std::stoll(y);
        return x < y;
    });
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::map<std::string, int> dense;
    for (size_t i = 0; i < labels.size(); ++i) dense[labels[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> ipairs;
    for (const auto& [a, b] : pairs) {
        SEPSYS_REQUIRE(a != b, "loop edge at label '" + a + "'");
        ipairs.emplace_back(dense[a], dense[b]);
    }
    LabeledGraph out;
    out.graph = Graph::from_pairs(static_cast<int>(labels.size()), ipairs);
    out.labels = std::move(labels);
    return out;
}

LabeledGraph from_edge_list(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::pair<std::string, std::string>> spairs;
    for (auto [a, b] : pairs)
        spairs.emplace_back(std::to_string(a), std::to_string(b));
    return from_edge_list(spairs);
}

LabeledGraph read_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank line
        if (a[0] == '#') continue;
        SEPSYS_REQUIRE(static_cast<bool>(ls >> b),
                       "line " + std::to_string(lineno) + ": expected two labels");
        SEPSYS_REQUIRE(!(ls >> extra),
                       "line " + std::to_string(lineno) + ": more than two labels");
        pairs.emplace_back(a, b);
    }
    return from_edge_list(pairs);
}

void write_edge_list(std::ostream& out, const std::vector<std::pair<int, int>>& pairs) {
    for (auto [a, b] : pairs) out << a << ' ' << b << '\n';
}

}  // namespace sepsys

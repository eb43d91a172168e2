#include "sepsys/certificate.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "sepsys/errors.hpp"

namespace sepsys {

namespace {

constexpr const char* kHeader = "sepsys-certificate v1";

Step step_from_string(const std::string& s) {
    if (s == "ks-singleton") return Step::KsSingleton;
    if (s == "outerplanar-singleton") return Step::OuterplanarSingleton;
    if (s == "cover") return Step::Cover;
    if (s == "elementary") return Step::Elementary;
    if (s == "jumbled") return Step::Jumbled;
    if (s == "cycle-mode") return Step::CycleMode;
    throw input_error("unknown provenance step '" + s + "'");
}

template <typename T>
T expect(std::istringstream& ls, const std::string& what) {
    T v;
    SEPSYS_REQUIRE(static_cast<bool>(ls >> v), "certificate: expected " + what);
    return v;
}

void expect_word(std::istringstream& ls, const std::string& word) {
    std::string w;
    SEPSYS_REQUIRE(static_cast<bool>(ls >> w) && w == word,
                   "certificate: expected keyword '" + word + "'");
}

}  // namespace

void write_certificate(std::ostream& out, const Graph& g, const SeparatingSystem& sys) {
    out << kHeader << '\n';
    out << "mode " << to_string(sys.mode) << '\n';
    out << "graph n " << g.vertex_count() << " m " << g.edge_count() << '\n';
    out << "size " << sys.size() << '\n';
    out << "levels " << sys.levels.size() << '\n';
    for (const LevelInfo& li : sys.levels) {
        out << "level " << li.level << " closure " << li.closure_size << " neighborhood "
            << li.neighborhood_size << " h " << li.h << " h_edges " << li.h_edges << " ks "
            << li.ks_size << " outerplanar " << li.outerplanar_size << " cover "
            << li.cover_size << " cover_target " << li.cover_target << " parts "
            << li.matching_parts << " part_elements " << li.matching_elements << " emitted "
            << li.emitted << '\n';
    }
    for (int i = 0; i < sys.size(); ++i) {
        const SystemElement& el = sys.elements[i];
        out << "element " << i << " level " << el.level << " step " << to_string(el.step);
        if (el.kind() == ElementKind::SingleEdge) {
            const auto& w = std::get<EdgeWitness>(el.witness);
            out << " kind edge " << w.u << ' ' << w.v;
        } else if (el.kind() == ElementKind::Cycle) {
            const auto& w = std::get<CycleWitness>(el.witness);
            out << " kind cycle len " << w.vertices.size();
            for (Vertex v : w.vertices) out << ' ' << v;
        } else {
            const auto& w = std::get<K4Witness>(el.witness);
            out << " kind k4 branch";
            for (Vertex v : w.branch) out << ' ' << v;
            for (const auto& p : w.paths) {
                out << " path " << p.size();
                for (Vertex v : p) out << ' ' << v;
            }
        }
        out << " edges " << el.edges.size();
        for (EdgeId id : el.edges) out << ' ' << id;
        out << '\n';
    }
    out << "end\n";
}

Certificate read_certificate(std::istream& in) {
    std::string line;
    SEPSYS_REQUIRE(std::getline(in, line) && line == kHeader,
                   "not a sepsys certificate (bad header)");
    Certificate cert;
    int size = -1;
    int levels = -1;
    bool done = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "mode") {
            std::string m = expect<std::string>(ls, "mode");
            SEPSYS_REQUIRE(m == "k4" || m == "cycle", "unknown mode '" + m + "'");
            cert.system.mode = m == "k4" ? Mode::K4 : Mode::CycleOnly;
        } else if (tag == "graph") {
            expect_word(ls, "n");
            cert.n = expect<int>(ls, "vertex count");
            expect_word(ls, "m");
            cert.m = expect<int>(ls, "edge count");
        } else if (tag == "size") {
            size = expect<int>(ls, "size");
        } else if (tag == "levels") {
            levels = expect<int>(ls, "level count");
        } else if (tag == "level") {
            LevelInfo li;
            li.level = expect<int>(ls, "level index");
            expect_word(ls, "closure");
            li.closure_size = expect<int>(ls, "closure size");
            expect_word(ls, "neighborhood");
            li.neighborhood_size = expect<int>(ls, "neighborhood size");
            expect_word(ls, "h");
            li.h = expect<int>(ls, "h");
            expect_word(ls, "h_edges");
            li.h_edges = expect<int>(ls, "h_edges");
            expect_word(ls, "ks");
            li.ks_size = expect<int>(ls, "ks");
            expect_word(ls, "outerplanar");
            li.outerplanar_size = expect<int>(ls, "outerplanar");
            expect_word(ls, "cover");
            li.cover_size = expect<int>(ls, "cover");
            expect_word(ls, "cover_target");
            li.cover_target = expect<int>(ls, "cover_target");
            expect_word(ls, "parts");
            li.matching_parts = expect<int>(ls, "parts");
            expect_word(ls, "part_elements");
            li.matching_elements = expect<int>(ls, "part_elements");
            expect_word(ls, "emitted");
            li.emitted = expect<int>(ls, "emitted");
            cert.system.levels.push_back(li);
        } else if (tag == "element") {
            SystemElement el;
            (void)expect<int>(ls, "element index");
            expect_word(ls, "level");
            el.level = expect<int>(ls, "element level");
            expect_word(ls, "step");
            el.step = step_from_string(expect<std::string>(ls, "step"));
            expect_word(ls, "kind");
            std::string kind = expect<std::string>(ls, "kind");
            if (kind == "edge") {
                EdgeWitness w;
                w.u = expect<int>(ls, "edge endpoint");
                w.v = expect<int>(ls, "edge endpoint");
                el.witness = w;
            } else if (kind == "cycle") {
                expect_word(ls, "len");
                int len = expect<int>(ls, "cycle length");
                CycleWitness w;
                for (int i = 0; i < len; ++i) w.vertices.push_back(expect<int>(ls, "vertex"));
                el.witness = std::move(w);
            } else if (kind == "k4") {
                expect_word(ls, "branch");
                K4Witness w;
                for (int i = 0; i < 4; ++i) w.branch[i] = expect<int>(ls, "branch vertex");
                for (int p = 0; p < 6; ++p) {
                    expect_word(ls, "path");
                    int len = expect<int>(ls, "path length");
                    for (int i = 0; i < len; ++i)
                        w.paths[p].push_back(expect<int>(ls, "path vertex"));
                }
                el.witness = std::move(w);
            } else {
                throw input_error("unknown element kind '" + kind + "'");
            }
            expect_word(ls, "edges");
            int ecount = expect<int>(ls, "edge count");
            for (int i = 0; i < ecount; ++i) el.edges.push_back(expect<int>(ls, "edge id"));
            cert.system.elements.push_back(std::move(el));
        } else if (tag == "end") {
            done = true;
            break;
        } else {
            throw input_error("unknown certificate line '" + tag + "'");
        }
    }
    SEPSYS_REQUIRE(done, "certificate truncated (missing end)");
    SEPSYS_REQUIRE(size == cert.system.size(), "certificate size field mismatch");
    SEPSYS_REQUIRE(levels == static_cast<int>(cert.system.levels.size()),
                   "certificate level count mismatch");
    return cert;
}

}  // namespace sepsys

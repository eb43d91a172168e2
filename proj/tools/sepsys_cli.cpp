#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sepsys/certificate.hpp"
#include "sepsys/corpus.hpp"
#include "sepsys/edge_list.hpp"
#include "sepsys/engine.hpp"
#include "sepsys/errors.hpp"
#include "sepsys/verifier.hpp"

namespace {

using namespace sepsys;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInvariant = 3;

LabeledGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file '" + path + "'");
    return read_edge_list(in);
}

int cmd_build(const std::string& input, const std::string& mode_name,
              const std::string& out_path, bool prune) {
    Mode mode = mode_name == "cycle" ? Mode::CycleOnly : Mode::K4;
    LabeledGraph lg = load_graph(input);
    EngineOptions opts;
    opts.prune = prune;
    BuildResult res = build_separating_system_traced(lg.graph, mode, opts);

    std::ostringstream buf;
    write_certificate(buf, lg.graph, res.system);
    if (out_path.empty() || out_path == "-") {
        std::cout << buf.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw input_error("cannot open output file '" + out_path + "'");
        out << buf.str();
    }
    std::cerr << "built " << to_string(mode) << " system: n=" << lg.graph.vertex_count()
              << " m=" << lg.graph.edge_count() << " size=" << res.system.size() << " (bound "
              << (mode == Mode::K4 ? 82 : 41) * lg.graph.vertex_count() << ")\n";
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
    LabeledGraph lg = load_graph(graph_path);
    std::ifstream in(cert_path);
    if (!in) throw input_error("cannot open certificate '" + cert_path + "'");
    Certificate cert = read_certificate(in);
    if (cert.n != lg.graph.vertex_count() || cert.m != lg.graph.edge_count())
        throw input_error("certificate does not match the graph (n/m differ)");

    StructureReport st = verify_structure(lg.graph, cert.system);
    if (!st.pass) {
        std::cout << "FAIL structure: " << st.detail << '\n';
        return kExitVerifyFailed;
    }
    SeparationReport sep = verify_separation(lg.graph, cert.system);
    if (!sep.pass) {
        std::cout << "FAIL separation: " << sep.detail << '\n';
        return kExitVerifyFailed;
    }
    SizeReport sz = verify_size(lg.graph, cert.system);
    if (!sz.pass) {
        std::cout << "FAIL size: " << sz.size << " > " << sz.bound << '\n';
        return kExitVerifyFailed;
    }
    std::cout << "PASS structure separation size (" << sz.size << " <= " << sz.bound << ")\n";
    return 0;
}

int cmd_corpus(const std::string& family, int n, double p, uint64_t seed, int dim, int rows,
               int cols, const std::string& out_path) {
    std::vector<std::pair<int, int>> pairs;
    if (family == "complete") {
        pairs = gen_complete(n);
    } else if (family == "gnp") {
        pairs = gen_gnp(n, p, seed);
    } else if (family == "hypercube") {
        pairs = gen_hypercube(dim);
    } else if (family == "tree") {
        pairs = gen_tree(n, seed);
    } else if (family == "grid") {
        pairs = gen_grid(rows, cols);
    } else if (family == "fig1") {
        pairs = gen_fig1();
    } else {
        throw input_error("unknown family '" + family + "'");
    }
    if (out_path.empty() || out_path == "-") {
        write_edge_list(std::cout, pairs);
    } else {
        std::ofstream out(out_path);
        if (!out) throw input_error("cannot open output file '" + out_path + "'");
        write_edge_list(out, pairs);
    }
    return 0;
}

int cmd_stats(const std::vector<std::string>& cert_paths) {
    std::cout << "n,m,mode,size,size_per_n,max_level_ratio,cover_size,cover_target,"
                 "cover_within\n";
    for (const std::string& path : cert_paths) {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open certificate '" + path + "'");
        Certificate cert = read_certificate(in);
        auto reports = level_accounting(cert.system);
        double max_ratio = 0.0;
        int cover = 0, target = 0;
        for (size_t i = 0; i < reports.size(); ++i) {
            const LevelReport& r = reports[i];
            if (r.closure_size > 0)
                max_ratio = std::max(
                    max_ratio, static_cast<double>(r.total) / r.closure_size);
            cover += cert.system.levels[i].cover_size;
            target += cert.system.levels[i].cover_target;
        }
        std::cout << cert.n << ',' << cert.m << ',' << to_string(cert.system.mode) << ','
                  << cert.system.size() << ','
                  << (cert.n ? static_cast<double>(cert.system.size()) / cert.n : 0.0) << ','
                  << max_ratio << ',' << cover << ',' << target << ','
                  << (cover <= target ? "yes" : "no") << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separating systems of edges, cycles and K4 subdivisions"};
    app.require_subcommand(1);

    std::string input, out_path, mode_name = "k4", graph_path, cert_path, family;
    bool no_prune = false;
    int n = 0, dim = 3, rows = 8, cols = 8;
    double p = 0.5;
    uint64_t seed = 1;
    std::vector<std::string> cert_paths;

    CLI::App* build = app.add_subcommand("build", "build a separating system certificate");
    build->add_option("input", input, "edge-list file")->required();
    build->add_option("--mode", mode_name, "k4 or cycle")
        ->check(CLI::IsMember({"k4", "cycle"}));
    build->add_option("--out", out_path, "certificate output path (default stdout)");
    build->add_flag("--no-prune", no_prune, "keep redundant elements");

    CLI::App* verify = app.add_subcommand("verify", "verify a certificate against a graph");
    verify->add_option("graph", graph_path, "edge-list file")->required();
    verify->add_option("certificate", cert_path, "certificate file")->required();

    CLI::App* corpus = app.add_subcommand("corpus", "generate a corpus graph");
    corpus->add_option("--family", family, "complete|gnp|hypercube|tree|grid|fig1")
        ->required();
    corpus->add_option("--n", n, "vertex count (complete, gnp, tree)");
    corpus->add_option("--p", p, "edge probability (gnp)");
    corpus->add_option("--seed", seed, "random seed");
    corpus->add_option("--dim", dim, "dimension (hypercube)");
    corpus->add_option("--rows", rows, "rows (grid)");
    corpus->add_option("--cols", cols, "columns (grid)");
    corpus->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* stats = app.add_subcommand("stats", "CSV report over certificates");
    stats->add_option("certificates", cert_paths, "certificate files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(input, mode_name, out_path, !no_prune);
        if (verify->parsed()) return cmd_verify(graph_path, cert_path);
        if (corpus->parsed())
            return cmd_corpus(family, n, p, seed, dim, rows, cols, out_path);
        if (stats->parsed()) return cmd_stats(cert_paths);
    } catch (const sepsys::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const sepsys::invariant_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    }
    return 0;
}

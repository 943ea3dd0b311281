// Command-line front end: build subdivisions, compute spectra, reproduce the
// reference multiplicity tables, and run the verification suites.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcx/colorings.hpp"
#include "gcx/gc.hpp"
#include "gcx/graph_io.hpp"
#include "gcx/named_graphs.hpp"
#include "gcx/sym_eig.hpp"
#include "gcx/torus_spectra.hpp"
#include "gcx/verify.hpp"

using namespace gcx;

namespace {

std::string fmt15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

RotationGraph load_seed(const std::string& seed, const std::string& graph_file) {
    if (!graph_file.empty()) return read_graph_json_file(graph_file);
    if (!seed.empty()) return build_named(seed);
    throw CLI::ValidationError("give --seed or --graph");
}

double default_tol() {
    if (const char* env = std::getenv("GCSPEC_TOL")) return std::atof(env);
    return 1e-6;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("cannot open " + path);
    return file;
}

void emit_graph(const RotationGraph& g, const std::string& out,
                const std::string& format) {
    std::ofstream file;
    std::ostream& os = open_out(file, out);
    if (format == "json")
        write_graph_json(g, os);
    else if (format == "dot")
        write_graph_dot(g, os);
    else if (format == "csv")
        write_edge_csv(g, os);
    else
        throw CLI::ValidationError("unknown format " + format);
}

void print_report(const VerifyReport& rep) {
    for (const auto& line : rep.lines) std::cout << line << "\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << "  (min slack " << fmt15(rep.min_slack)
              << ")\n";
}

void parse_pair(const std::string& s, std::int64_t& k, std::int64_t& l) {
    std::istringstream in(s);
    char comma;
    if (in >> k >> comma >> l && comma == ',') return;
    throw CLI::ValidationError("expected k,l");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goldberg-Coxeter subdivisions and their Laplacian spectra"};
    app.require_subcommand(1);

    std::string seed, graph_file, out, format = "json";
    std::int64_t k = 1, l = 0;
    double tol = default_tol();
    int jobs = 1;

    auto add_common = [&](CLI::App* cmd, bool with_params) {
        cmd->add_option("--seed", seed,
                        "named seed: tetrahedron|cube|dodecahedron|octahedron|"
                        "triangular_prism|k5|hex_torus:<k>|square_torus:<n>");
        cmd->add_option("--graph", graph_file, "seed graph from a json file");
        if (with_params) {
            cmd->add_option("--k", k, "first parameter");
            cmd->add_option("--l", l, "second parameter");
        }
        cmd->add_option("--out", out, "output path (default stdout)");
        cmd->add_option("--tol", tol, "grouping tolerance (env GCSPEC_TOL)");
    };

    // build
    auto* cmd_build = app.add_subcommand("build", "construct GC_{k,l}(X)");
    add_common(cmd_build, true);
    std::string provenance_out;
    cmd_build->add_option("--format", format, "json|dot|csv");
    cmd_build->add_option("--provenance", provenance_out, "provenance json path");
    cmd_build->callback([&]() {
        RotationGraph x = load_seed(seed, graph_file);
        auto norm = normalize_params(k, l, x.degree(0));
        GCGraph g = gc_build(x, norm.k, norm.l);
        emit_graph(g.graph, out, format);
        if (!provenance_out.empty()) {
            std::ofstream f(provenance_out);
            write_provenance_json(g, f);
        }
    });

    // export: write a seed graph without constructing anything
    auto* cmd_export = app.add_subcommand("export", "write a graph in json/dot/csv");
    add_common(cmd_export, false);
    cmd_export->add_option("--format", format, "json|dot|csv");
    cmd_export->callback([&]() { emit_graph(load_seed(seed, graph_file), out, format); });

    // spectrum
    auto* cmd_spectrum = app.add_subcommand("spectrum", "Laplacian spectrum");
    add_common(cmd_spectrum, true);
    bool raw_graph = false;
    std::string sformat = "csv";
    cmd_spectrum->add_option("--format", sformat, "csv|json");
    cmd_spectrum->add_flag("--no-subdivision", raw_graph,
                           "spectrum of the seed itself, ignoring k,l");
    cmd_spectrum->callback([&]() {
        RotationGraph x = load_seed(seed, graph_file);
        RotationGraph target = x;
        if (!raw_graph) {
            auto norm = normalize_params(k, l, x.degree(0));
            target = gc_build(x, norm.k, norm.l).graph;
        }
        Spectrum s = make_spectrum(sym_eig(laplacian(target)).values, tol);
        std::ofstream file;
        std::ostream& os = open_out(file, out);
        if (sformat == "csv") {
            for (double v : s.eigenvalues) os << fmt15(v) << "\n";
        } else if (sformat == "json") {
            nlohmann::json j;
            j["eigenvalues"] = nlohmann::json::array();
            for (double v : s.eigenvalues) j["eigenvalues"].push_back(v);
            j["groups"] = nlohmann::json::array();
            for (const auto& g : s.groups)
                j["groups"].push_back(
                    {{"value", g.value}, {"multiplicity", g.multiplicity}});
            os << j.dump(1) << "\n";
        } else {
            throw CLI::ValidationError("unknown format " + sformat);
        }
    });

    // tables
    auto* cmd_tables = app.add_subcommand("tables", "reference multiplicity tables");
    int which = 1, kmax = 10;
    cmd_tables->add_option("--which", which, "1 = eigenvalue 4, 2 = eigenvalue 2")
        ->check(CLI::Range(1, 2));
    cmd_tables->add_option("--kmax", kmax, "columns k = 1..kmax")
        ->check(CLI::Range(1, 12));
    cmd_tables->add_option("--jobs", jobs, "parallel cells");
    cmd_tables->add_option("--out", out, "output path");
    cmd_tables->callback([&]() {
        SpectrumCache cache;
        TableRun run = run_table(which == 1 ? 4.0 : 2.0, kmax, jobs, cache);
        std::ofstream file;
        std::ostream& os = open_out(file, out);
        os << "seed";
        for (int c = 1; c <= kmax; ++c) os << ",(" << c << ",0)";
        os << "\n";
        for (int s = 0; s < 4; ++s) {
            os << kTableSeeds[s];
            for (int c = 0; c < kmax; ++c) os << "," << run.rows[s][c];
            os << "\n";
        }
        if (!run.guard_gap_ok) {
            std::cerr << "guard gap around 2/4 violated\n";
            std::exit(1);
        }
        if (!run.matches_expected) {
            std::cerr << "table differs from the reference values\n";
            std::exit(1);
        }
    });

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "theorem verification suites");
    std::string suite;
    std::string z_str = "2,0", zp_str = "1,1";
    int kv = 3, valence = 3;
    double grid = 0.01;
    cmd_verify
        ->add_option("suite", suite,
                     "thm1_2|thm1_3|thm1_4|thm1_5|thm1_6|thm3_2|thm3_3|prop2_3|"
                     "prop2_4|lemma4_3|lemma4_4")
        ->required();
    cmd_verify->add_option("--seed", seed, "seed graph name");
    cmd_verify->add_option("--graph", graph_file, "seed graph from file");
    cmd_verify->add_option("--k", kv, "parameter");
    cmd_verify->add_option("--l", l, "second parameter (thm1_2)");
    cmd_verify->add_option("--z", z_str, "k,l (prop2_3)");
    cmd_verify->add_option("--zprime", zp_str, "k,l (prop2_3)");
    cmd_verify->add_option("--valence", valence, "3 or 4 (thm1_3)");
    cmd_verify->add_option("--grid", grid, "grid step (thm1_3)");
    cmd_verify->callback([&]() {
        SpectrumCache cache;
        VerifyReport rep;
        std::string name = seed.empty() ? "graph" : seed;
        if (suite == "thm1_2") {
            rep = verify_thm_1_2(name, load_seed(seed, graph_file), kv, l, cache);
        } else if (suite == "thm1_3") {
            double r = invariant_covering_radius(valence, kv, grid);
            rep.check(r < 0.2, 0.2 - r,
                      "covering radius " + fmt15(r) + " at k=" + std::to_string(kv));
        } else if (suite == "thm1_4" || suite == "thm1_5") {
            rep = verify_multiplicity_bounds(name, load_seed(seed, graph_file), kv, cache);
        } else if (suite == "thm1_6") {
            rep = verify_face_condition_bounds(name, load_seed(seed, graph_file), kv,
                                               cache);
        } else if (suite == "thm3_2" || suite == "thm3_3") {
            rep = verify_interlacing(name, load_seed(seed, graph_file), kv, cache);
        } else if (suite == "prop2_3") {
            std::int64_t zk, zl, zpk, zpl;
            parse_pair(z_str, zk, zl);
            parse_pair(zp_str, zpk, zpl);
            RotationGraph x = load_seed(seed, graph_file);
            bool ok = compose_check(x, zk, zl, zpk, zpl);
            rep.check(ok, ok ? 0.0 : -1.0, "composition " + z_str + " * " + zp_str);
        } else if (suite == "prop2_4") {
            rep = verify_bipartite_symmetry(name, load_seed(seed, graph_file), cache);
        } else if (suite == "lemma4_3") {
            rep = verify_vanishing_rules(kv);
        } else if (suite == "lemma4_4") {
            rep = verify_fold(kv);
        } else {
            throw CLI::ValidationError("unknown suite " + suite);
        }
        print_report(rep);
        if (!rep.pass) std::exit(1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

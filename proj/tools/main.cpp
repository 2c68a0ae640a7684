#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "outercolor/errors.hpp"
#include "outercolor/extension.hpp"
#include "outercolor/generate.hpp"
#include "outercolor/graph.hpp"
#include "outercolor/incidence.hpp"
#include "outercolor/io.hpp"
#include "outercolor/oracle.hpp"
#include "outercolor/reduction.hpp"

namespace {

using namespace outercolor;

std::string read_text(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw MalformedInputError("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

int run_color(const std::string& path) {
    Graph g = parse_edge_list(read_text(path));
    SolveResult res = solve(g);
    std::cout << emit_coloring(g, res.coloring);
    return 0;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path) {
    Graph g = parse_edge_list(read_text(graph_path));
    IncidenceColoring c = parse_coloring(read_text(coloring_path));
    VerificationReport report = verify_coloring(g, c);
    if (report.ok()) {
        std::cout << "coloring is valid\n";
        return 0;
    }
    for (const Violation& v : report.violations) std::cout << describe_violation(v) << "\n";
    return 1;
}

int run_oracle(const std::string& path, int l, bool want_min_k, std::optional<int> k) {
    Graph g = parse_edge_list(read_text(path));
    if (want_min_k) {
        std::cout << min_incidence_k(g, l) << "\n";
        return 0;
    }
    auto witness = exists_kl_coloring(g, *k, l);
    if (!witness) {
        std::cout << "no (" << *k << ", " << l << ")-coloring exists\n";
        return 1;
    }
    std::cout << emit_coloring(g, *witness);
    return 0;
}

int run_gen(const std::string& fam, bool random, const GeneratorParams& params) {
    Graph g = random ? gen_outerplanar(params) : family(fam, params.n);
    std::cout << emit_edge_list(g);
    return 0;
}

// Exhaustively replays one of the two induction claims over every connected
// graph with 2..n vertices: "lemma" = every outerplanar one with max degree
// >= 3 yields a reducible configuration, "theorem" = every outerplanar one
// is colorable with max(degree)+2 colors, both by the oracle and by the
// constructive solver.
int run_enumerate(int n, const std::string& check) {
    if (n < 2 || n > 7) throw MalformedInputError("enumerate supports --n between 2 and 7");
    std::uint64_t scanned = 0, eligible = 0;
    for (int size = 2; size <= n; ++size) {
        ConnectedGraphStream stream(size);
        while (auto g = stream.next()) {
            ++scanned;
            if (!is_outerplanar_exact(*g)) continue;
            if (check == "lemma") {
                if (g->max_degree() < 3) continue;
                ++eligible;
                if (!find_configuration(*g)) {
                    std::cout << "FAIL: no configuration in outerplanar graph "
                              << emit_edge_list(*g);
                    return 1;
                }
            } else {
                ++eligible;
                int bound = std::max(g->max_degree(), 1) + 2;
                if (min_incidence_k(*g, 2) > bound) {
                    std::cout << "FAIL: oracle needs more than " << bound
                              << " colors on " << emit_edge_list(*g);
                    return 1;
                }
                SolveResult res = solve(*g);
                if (res.k != bound || !verify_coloring(*g, res.coloring).ok()) {
                    std::cout << "FAIL: solver output invalid on " << emit_edge_list(*g);
                    return 1;
                }
            }
        }
    }
    std::cout << "check '" << check << "' holds on all " << eligible
              << " eligible graphs (" << scanned << " connected graphs, n <= " << n
              << ")\n";
    return 0;
}

int run_selftest() {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        bool ok = true;
        for (int n = 3; n <= 120 && ok; ++n)
            ok = verify_coloring(family("cycle", n),
                                 color_base_component(family("cycle", n), {4, 2}))
                     .ok();
        for (int n = 2; n <= 120 && ok; ++n)
            ok = verify_coloring(family("path", n),
                                 color_base_component(family("path", n), {4, 2}))
                     .ok();
        report("paths and cycles, 4 colors", ok);
    }
    {
        bool ok = true;
        for (int size = 2; size <= 5 && ok; ++size) {
            ConnectedGraphStream stream(size);
            while (auto g = stream.next()) {
                if (!is_outerplanar_exact(*g)) continue;
                if (g->max_degree() >= 3 && !find_configuration(*g)) ok = false;
                SolveResult res = solve(*g);
                if (!verify_coloring(*g, res.coloring).ok()) ok = false;
            }
        }
        report("exhaustive small graphs", ok);
    }
    {
        bool ok = true;
        int i = 0;
        for (int n : {3, 7, 20, 61, 150, 300}) {
            for (double keep : {0.0, 0.5, 1.0}) {
                for (double del : {0.0, 0.2}) {
                    Graph g = gen_outerplanar({n, keep, del, static_cast<std::uint64_t>(++i)});
                    SolveResult res = solve(g);
                    if (res.k != g.max_degree() + 2) ok = false;
                    if (!verify_coloring(g, res.coloring).ok()) ok = false;
                }
            }
        }
        report("random instances", ok);
    }
    {
        bool k4 = false, k23 = false;
        try {
            solve(family("complete4", 4));
        } catch (const NotOuterplanarError&) {
            k4 = true;
        }
        try {
            solve(family("k23", 5));
        } catch (const NotReducibleError&) {
            k23 = true;
        }
        report("non-outerplanar inputs rejected", k4 && k23);
    }
    {
        Graph g = gen_outerplanar({120, 0.7, 0.1, 5});
        report("deterministic resolve",
               solve(g).coloring == solve(g).coloring && emit_coloring(g, solve(g).coloring) ==
                                                             emit_coloring(g, solve(g).coloring));
    }

    if (failures == 0) {
        std::cout << "selftest passed\n";
        return 0;
    }
    std::cout << "selftest failed (" << failures << ")\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"incidence coloring of outerplanar graphs"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string coloring_path;
    auto* color = app.add_subcommand("color", "color a graph, JSON result on stdout");
    color->add_option("graph", graph_path, "edge list file, - for stdin")->required();

    std::string v_graph, v_coloring;
    auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
    verify->add_option("graph", v_graph)->required();
    verify->add_option("coloring", v_coloring)->required();

    std::string o_graph;
    int o_l = 2;
    bool o_min_k = false;
    std::optional<int> o_k;
    auto* oracle = app.add_subcommand("oracle", "exhaustive-search ground truth");
    oracle->add_option("graph", o_graph)->required();
    oracle->add_option("--l", o_l, "incoming bound");
    auto* min_k_flag = oracle->add_flag("--min-k", o_min_k, "print the smallest workable k");
    oracle->add_option("--k", o_k, "test this palette size")->excludes(min_k_flag);

    std::string g_family;
    bool g_random = false;
    outercolor::GeneratorParams params;
    auto* gen = app.add_subcommand("gen", "emit a graph on stdout");
    auto* fam_opt = gen->add_option("--family", g_family, "path|cycle|star|fan|complete4|k23");
    auto* rnd_opt = gen->add_flag("--random", g_random, "random outerplanar instance");
    gen->add_option("--n", params.n, "vertex count")->required();
    gen->add_option("--seed", params.seed, "random seed");
    gen->add_option("--chord-keep", params.chord_keep_probability, "chord survival probability");
    gen->add_option("--hull-delete", params.hull_delete_probability,
                    "hull edge deletion probability");
    fam_opt->excludes(rnd_opt);

    int e_n = 0;
    std::string e_check;
    auto* enumerate = app.add_subcommand("enumerate", "replay an exhaustive check");
    enumerate->add_option("--n", e_n, "largest vertex count, at most 7")->required();
    enumerate->add_option("--check", e_check, "lemma|theorem")
        ->required()
        ->check(CLI::IsMember({"lemma", "theorem"}));

    auto* selftest = app.add_subcommand("selftest", "quick end-to-end sanity run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (app.got_subcommand(color)) return run_color(graph_path);
        if (app.got_subcommand(verify)) return run_verify(v_graph, v_coloring);
        if (app.got_subcommand(oracle)) {
            if (o_min_k == o_k.has_value()) {
                std::cerr << "error: oracle needs exactly one of --min-k and --k\n";
                return 3;
            }
            return run_oracle(o_graph, o_l, o_min_k, o_k);
        }
        if (app.got_subcommand(gen)) {
            if (g_family.empty() && !g_random) {
                std::cerr << "error: gen needs --family or --random\n";
                return 3;
            }
            return run_gen(g_family, g_random, params);
        }
        if (app.got_subcommand(enumerate)) return run_enumerate(e_n, e_check);
        if (app.got_subcommand(selftest)) return run_selftest();
    } catch (const outercolor::MalformedInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const outercolor::NotOuterplanarError& e) {
        std::cerr << "not outerplanar: " << e.what() << "\n";
        return 2;
    } catch (const outercolor::NotReducibleError& e) {
        std::cerr << "not outerplanar: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "outercolor/errors.hpp"
#include "outercolor/extension.hpp"
#include "outercolor/generate.hpp"
#include "outercolor/graph.hpp"
#include "outercolor/io.hpp"
#include "outercolor/oracle.hpp"
#include "test_support.hpp"

using namespace outercolor;

namespace {

std::vector<std::pair<int, int>> chord_set(const Graph& g) {
    std::vector<std::pair<int, int>> chords;
    int n = g.vertex_count();
    for (int v : g.vertices())
        for (int w : g.neighbors(v)) {
            if (v >= w) continue;
            bool hull = (w == v + 1) || (v == 0 && w == n - 1);
            if (!hull) chords.push_back({v, w});
        }
    return chords;
}

}  // namespace

TEST_CASE("maximal instances are triangulations of the polygon") {
    CHECK(gen_maximal_outerplanar(3, 0) == family("cycle", 3));
    for (int n : {4, 5, 9, 17, 40}) {
        for (std::uint64_t seed : {0ull, 1ull, 12345ull}) {
            Graph g = gen_maximal_outerplanar(n, seed);
            CHECK(g.vertex_count() == n);
            CHECK(g.edge_count() == 2 * n - 3);
            for (int v = 0; v < n; ++v) CHECK(g.has_edge(v, (v + 1) % n));
            CHECK(is_connected(g));
            if (n <= 10) CHECK(is_outerplanar_exact(g));
        }
    }
    CHECK_THROWS_AS(gen_maximal_outerplanar(2, 0), MalformedInputError);
}

TEST_CASE("triangulation sampling reaches every shape") {
    // n=5 has exactly five triangulations, distinguished by their chord pairs.
    std::map<std::vector<std::pair<int, int>>, int> shapes;
    for (std::uint64_t seed = 0; seed < 300; ++seed)
        ++shapes[chord_set(gen_maximal_outerplanar(5, seed))];
    CHECK(shapes.size() == 5);
    for (const auto& [chords, count] : shapes) {
        CHECK(chords.size() == 2);
        CHECK(count > 20);  // 60 expected under uniformity
    }

    std::set<std::vector<std::pair<int, int>>> diag4;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        diag4.insert(chord_set(gen_maximal_outerplanar(4, seed)));
    CHECK(diag4.size() == 2);
}

TEST_CASE("generation is deterministic in the seed") {
    GeneratorParams p{30, 0.6, 0.1, 77};
    CHECK(gen_outerplanar(p) == gen_outerplanar(p));
    GeneratorParams q = p;
    q.seed = 78;
    CHECK(!(gen_outerplanar(p) == gen_outerplanar(q)));
}

TEST_CASE("thinning knobs hit their extremes") {
    // Keep everything: the full triangulation.
    CHECK(gen_outerplanar({11, 1.0, 0.0, 9}) == gen_maximal_outerplanar(11, 9));
    // Drop all chords: the bare cycle.
    CHECK(gen_outerplanar({11, 0.0, 0.0, 9}) == family("cycle", 11));
    // Drop all chords and all deletable hull edges: a spanning path remains.
    Graph path_like = gen_outerplanar({11, 0.0, 1.0, 9});
    CHECK(path_like.edge_count() == 10);
    CHECK(is_connected(path_like));
    CHECK(path_like.max_degree() == 2);
}

TEST_CASE("thinned instances stay connected and outerplanar") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (double keep : {0.0, 0.5, 1.0}) {
            for (double del : {0.0, 0.2}) {
                Graph g = gen_outerplanar({9, keep, del, seed});
                CHECK(is_connected(g));
                CHECK(is_outerplanar_exact(g));
            }
        }
    }
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(gen_outerplanar({2, 1.0, 0.0, 0}), MalformedInputError);
    CHECK_THROWS_AS(gen_outerplanar({5, -0.1, 0.0, 0}), MalformedInputError);
    CHECK_THROWS_AS(gen_outerplanar({5, 1.0, 1.5, 0}), MalformedInputError);
}

TEST_CASE("named families") {
    Graph p1 = family("path", 1);
    CHECK(p1.vertex_count() == 1);
    CHECK(p1.edge_count() == 0);
    CHECK(family("path", 4) == Graph::from_edges({{0, 1}, {1, 2}, {2, 3}}));
    CHECK(family("cycle", 3) == Graph::from_edges({{0, 1}, {1, 2}, {2, 0}}));
    Graph star = family("star", 5);
    CHECK(star.degree(0) == 4);
    CHECK(star.edge_count() == 4);
    Graph fan = family("fan", 5);
    CHECK(fan.edge_count() == 7);
    CHECK(fan.degree(4) == 4);
    CHECK(family("complete4", 0) ==
          Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(family("k23", 0) ==
          Graph::from_edges({{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
    CHECK_THROWS_AS(family("wheel", 5), MalformedInputError);
    CHECK_THROWS_AS(family("cycle", 2), MalformedInputError);
    CHECK_THROWS_AS(family("fan", 2), MalformedInputError);
}

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("0 1\n1 2\n") == family("path", 3));
    CHECK(parse_edge_list("# comment\n\n0 1\n\n# more\n1 2\n") == family("path", 3));
    CHECK(parse_edge_list("1 2\n0 1\n1 2\n") == family("path", 3));  // dup collapses
    Graph declared = parse_edge_list("v 4\n0 1\n");
    CHECK(declared.vertex_count() == 4);
    CHECK(declared.degree(3) == 0);
    CHECK(parse_edge_list("").vertex_count() == 0);
}

TEST_CASE("edge list parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n2\n"), doctest::Contains("line 2"),
                         MalformedInputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 0\n"), doctest::Contains("line 1"),
                         MalformedInputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n1 2 3\n"), doctest::Contains("line 2"),
                         MalformedInputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("a b\n"), doctest::Contains("line 1"),
                         MalformedInputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 -2\n"), doctest::Contains("line 1"),
                         MalformedInputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1.5\n"), doctest::Contains("line 1"),
                         MalformedInputError);
}

TEST_CASE("edge list emission round-trips") {
    CHECK(emit_edge_list(family("path", 3)) == "0 1\n1 2\n");
    std::vector<int> verts{0, 1, 2};
    Graph with_isolated = Graph::from_edges({{0, 1}}, verts);
    CHECK(emit_edge_list(with_isolated) == "v 3\n0 1\n");
    CHECK(parse_edge_list(emit_edge_list(with_isolated)) == with_isolated);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = gen_outerplanar({12, 0.5, 0.2, seed});
        CHECK(parse_edge_list(emit_edge_list(g)) == g);
    }
}

TEST_CASE("coloring JSON has the documented shape") {
    Graph g = family("path", 3);
    SolveResult res = solve(g);
    std::string text = emit_coloring(g, res.coloring, 42);
    auto doc = nlohmann::json::parse(text);
    CHECK(doc.at("k") == res.k);
    CHECK(doc.at("l") == 2);
    CHECK(doc.at("colors").size() == 4);
    CHECK(doc.at("colors")[0].at("tail") == 0);
    CHECK(doc.at("colors")[0].at("head") == 1);
    CHECK(doc.at("meta").at("delta") == 2);
    CHECK(doc.at("meta").at("seed") == 42);
    CHECK(emit_coloring(g, res.coloring).find("seed") == std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("coloring JSON round-trips") {
    for (std::uint64_t seed : {3ull, 8ull}) {
        Graph g = gen_outerplanar({15, 0.8, 0.1, seed});
        SolveResult res = solve(g);
        IncidenceColoring back = parse_coloring(emit_coloring(g, res.coloring));
        CHECK(back == res.coloring);
        CHECK(verify_coloring(g, back).ok());
    }
}

TEST_CASE("coloring parse rejects malformed documents") {
    CHECK_THROWS_AS(parse_coloring("not json"), MalformedInputError);
    CHECK_THROWS_AS(parse_coloring("{\"k\": 4}"), MalformedInputError);
    CHECK_THROWS_AS(parse_coloring("{\"k\": 4, \"l\": 2, \"colors\": [{\"tail\": 0}]}"),
                    MalformedInputError);
    CHECK_THROWS_AS(parse_coloring("{\"k\": 4, \"l\": 2, \"colors\": 7}"),
                    MalformedInputError);
    CHECK_THROWS_AS(parse_coloring("{\"k\": -1, \"l\": 2, \"colors\": []}"),
                    MalformedInputError);
    CHECK_THROWS_AS(
        parse_coloring("{\"k\": 4, \"l\": 2, \"colors\": [{\"tail\": 0, \"head\": 1, "
                       "\"color\": \"red\"}]}"),
        MalformedInputError);
}

TEST_CASE("violations have readable one-line descriptions") {
    std::set<std::string> lines;
    lines.insert(describe_violation(ForeignIncidence{{0, 9}}));
    lines.insert(describe_violation(PaletteOverflow{{0, 1}, 7}));
    lines.insert(describe_violation(AdjacencyConflict{{0, 1}, {1, 2}}));
    lines.insert(describe_violation(IncomingOverflow{4, {0, 1, 2}}));
    lines.insert(describe_violation(UncoloredIncidence{{2, 3}}));
    CHECK(lines.size() == 5);  // all distinct
    for (const auto& line : lines) {
        CHECK(!line.empty());
        CHECK(line.find('\n') == std::string::npos);
    }
    CHECK(describe_violation(IncomingOverflow{4, {0, 1, 2}}).find('4') != std::string::npos);
}

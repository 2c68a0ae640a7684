// Acceptance harness: replays the eight headline guarantees end to end and
// prints one PASS/FAIL line for each.  Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "outercolor/errors.hpp"
#include "outercolor/extension.hpp"
#include "outercolor/generate.hpp"
#include "outercolor/graph.hpp"
#include "outercolor/incidence.hpp"
#include "outercolor/io.hpp"
#include "outercolor/oracle.hpp"
#include "outercolor/reduction.hpp"
#include "test_support.hpp"

using namespace outercolor;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

// Shared between criteria: instances produced for criterion 1 feed the
// mutation study (criterion 6) and the false-rejection count (criterion 5).
struct Criterion1State {
    std::vector<std::pair<Graph, IncidenceColoring>> small_cases;  // n <= 50
    int rejections = 0;
    bool ran = false;
};

// 1000 random instances spanning n = 3..2000 over the full parameter grid,
// each colored with palette exactly max_degree + 2 and verified, within 60s.
// Small sizes are visited first so the mutation study has material; the rest
// follow a geometric ramp so the family reaches n = 2000 without the large
// instances dominating the budget.
Outcome criterion1(Criterion1State& state) {
    const auto start = Clock::now();
    const double keeps[] = {0.0, 0.5, 1.0};
    const double dels[] = {0.0, 0.2};
    int done = 0, palette_bad = 0, verify_bad = 0;
    int n_min = 1 << 30, n_max = 0;
    state.ran = true;
    for (int i = 0; i < 1000; ++i) {
        int n;
        if (i < 120) {
            n = 3 + i % 48;
        } else {
            double t = static_cast<double>(i - 120) / 879.0;
            n = static_cast<int>(std::llround(3.0 * std::pow(2000.0 / 3.0, t)));
        }
        n_min = std::min(n_min, n);
        n_max = std::max(n_max, n);
        GeneratorParams params{n, keeps[i % 3], dels[(i / 3) % 2],
                               1000 + static_cast<std::uint64_t>(i)};
        Graph g = gen_outerplanar(params);
        try {
            SolveResult res = solve(g);
            if (res.k != g.max_degree() + 2) ++palette_bad;
            if (!verify_coloring(g, res.coloring).ok()) ++verify_bad;
            if (n <= 50 && state.small_cases.size() < 100)
                state.small_cases.emplace_back(std::move(g), std::move(res.coloring));
        } catch (const std::exception&) {
            ++state.rejections;
        }
        ++done;
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << done << " instances, n " << n_min << ".." << n_max << ", " << state.rejections
           << " rejections, " << palette_bad << " palette misses, " << verify_bad
           << " verifier misses, " << elapsed << "s";
    bool pass = done == 1000 && n_min == 3 && n_max == 2000 && state.rejections == 0 &&
                palette_bad == 0 && verify_bad == 0 && elapsed < 60.0;
    return {pass, detail.str()};
}

// Every connected outerplanar graph with 2 <= n <= 7 and max degree >= 3
// contains a reducible configuration, within 5 minutes.
Outcome criterion2() {
    const auto start = Clock::now();
    std::uint64_t scanned = 0, eligible = 0, missing = 0;
    for (int n = 2; n <= 7; ++n) {
        ConnectedGraphStream stream(n);
        while (auto g = stream.next()) {
            ++scanned;
            if (g->max_degree() < 3 || !is_outerplanar_exact(*g)) continue;
            ++eligible;
            if (!find_configuration(*g)) ++missing;
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << eligible << " eligible of " << scanned << " connected graphs, " << missing
           << " without a configuration, " << elapsed << "s";
    bool pass = scanned == 1893731 && eligible > 0 && missing == 0 && elapsed < 300.0;
    return {pass, detail.str()};
}

// Every connected outerplanar graph with n <= 6: the exhaustive oracle needs
// at most max_degree + 2 colors, and the constructive solver's output
// verifies with that palette.
Outcome criterion3() {
    std::uint64_t outerplanar = 0, oracle_bad = 0, solver_bad = 0;
    for (int n = 2; n <= 6; ++n) {
        ConnectedGraphStream stream(n);
        while (auto g = stream.next()) {
            if (!is_outerplanar_exact(*g)) continue;
            ++outerplanar;
            const int bound = g->max_degree() + 2;
            if (min_incidence_k(*g, 2) > bound) ++oracle_bad;
            SolveResult res = solve(*g);
            if (res.k != bound || !verify_coloring(*g, res.coloring).ok()) ++solver_bad;
        }
    }
    std::ostringstream detail;
    detail << outerplanar << " outerplanar graphs, " << oracle_bad << " oracle bound misses, "
           << solver_bad << " solver misses";
    return {outerplanar > 0 && oracle_bad == 0 && solver_bad == 0, detail.str()};
}

// Pinned minima for the landmark graphs.
Outcome criterion4() {
    struct Pin {
        const char* label;
        Graph g;
        int expect;
    };
    const Pin pins[] = {
        {"K1,3", family("star", 4), 4},
        {"C3", family("cycle", 3), 3},
        {"C5", family("cycle", 5), 4},
        {"P2", family("path", 2), 2},
    };
    std::ostringstream detail;
    bool pass = true;
    for (const Pin& pin : pins) {
        int got = min_incidence_k(pin.g, 2);
        if (got != pin.expect) pass = false;
        detail << pin.label << "=" << got << " ";
    }
    detail << (pass ? "(all as pinned)" : "(mismatch)");
    return {pass, detail.str()};
}

// The tool turns K4 and K2,3 away with exit code 2; the cheap screen already
// rejects K4; no outerplanar instance from criterion 1 was ever rejected.
Outcome criterion5(const Criterion1State& c1) {
    testsupport::ScratchFile k4(emit_edge_list(family("complete4", 4)));
    testsupport::ScratchFile k23(emit_edge_list(family("k23", 5)));
    int k4_exit = testsupport::run_cli("color " + k4.path).exit_code;
    int k23_exit = testsupport::run_cli("color " + k23.path).exit_code;
    bool screen_rejects_k4 = !outerplanar_screen(family("complete4", 4));
    std::ostringstream detail;
    detail << "K4 exit " << k4_exit << ", K2,3 exit " << k23_exit << ", screen catches K4: "
           << (screen_rejects_k4 ? "yes" : "no") << ", false rejections: "
           << (c1.ran ? std::to_string(c1.rejections) : std::string("criterion 1 did not run"));
    bool pass =
        k4_exit == 2 && k23_exit == 2 && screen_rejects_k4 && c1.ran && c1.rejections == 0;
    return {pass, detail.str()};
}

// Single-incidence recolorings of 100 solved instances with n <= 50: the
// verifier flags exactly the mutations that break the rules.
Outcome criterion6(const Criterion1State& c1) {
    if (c1.small_cases.size() < 100)
        return {false, "only " + std::to_string(c1.small_cases.size()) +
                           " small instances available from criterion 1"};
    std::uint64_t mutations = 0, undetected = 0, false_alarms = 0;
    for (const auto& [g, coloring] : c1.small_cases) {
        const int k = coloring.palette_size();
        for (const auto& [inc, current] : coloring.assignment()) {
            for (int col = 0; col < k; ++col) {
                if (col == current) continue;
                ++mutations;
                IncidenceColoring mutated = coloring;
                mutated.assign(inc, col);
                bool breaks = testsupport::naive_recolor_breaks(g, coloring.assignment(), inc,
                                                                col, coloring.incoming_bound());
                bool flagged = !verify_coloring(g, mutated).ok();
                if (breaks && !flagged) ++undetected;
                if (!breaks && flagged) ++false_alarms;
            }
        }
    }
    std::ostringstream detail;
    detail << c1.small_cases.size() << " colorings, " << mutations << " recolorings, "
           << undetected << " undetected, " << false_alarms << " false alarms";
    return {mutations > 0 && undetected == 0 && false_alarms == 0, detail.str()};
}

// The degree-2 base colorer handles every cycle (3..1000) and path (2..1000)
// with a 4-color palette.
Outcome criterion7() {
    std::uint64_t shapes = 0, bad = 0;
    for (int n = 3; n <= 1000; ++n) {
        Graph g = family("cycle", n);
        ++shapes;
        if (!verify_coloring(g, color_base_component(g, {4, 2})).ok()) ++bad;
    }
    for (int n = 2; n <= 1000; ++n) {
        Graph g = family("path", n);
        ++shapes;
        if (!verify_coloring(g, color_base_component(g, {4, 2})).ok()) ++bad;
    }
    std::ostringstream detail;
    detail << shapes << " shapes, " << bad << " invalid";
    return {shapes == 1997 && bad == 0, detail.str()};
}

// Equal inputs give byte-identical tool output.
Outcome criterion8() {
    testsupport::ScratchFile dense(emit_edge_list(gen_maximal_outerplanar(30, 1)));
    testsupport::ScratchFile sparse(emit_edge_list(gen_outerplanar({47, 0.4, 0.2, 2})));
    auto a1 = testsupport::run_cli("color " + dense.path);
    auto a2 = testsupport::run_cli("color " + dense.path);
    auto b1 = testsupport::run_cli("color " + sparse.path);
    auto b2 = testsupport::run_cli("color " + sparse.path);
    auto g1 = testsupport::run_cli("gen --random --n 100 --seed 5");
    auto g2 = testsupport::run_cli("gen --random --n 100 --seed 5");
    bool pass = a1.exit_code == 0 && b1.exit_code == 0 && g1.exit_code == 0 &&
                a1.out == a2.out && b1.out == b2.out && g1.out == g2.out && !a1.out.empty();
    std::ostringstream detail;
    detail << "color runs " << (a1.out == a2.out && b1.out == b2.out ? "stable" : "UNSTABLE")
           << ", gen runs " << (g1.out == g2.out ? "stable" : "UNSTABLE");
    return {pass, detail.str()};
}

}  // namespace

int main() {
    Criterion1State c1_state;
    int failures = 0;
    auto report = [&](int id, const Outcome& outcome) {
        std::cout << "criterion " << id << ": " << (outcome.pass ? "PASS" : "FAIL") << " — "
                  << outcome.detail << "\n"
                  << std::flush;
        if (!outcome.pass) ++failures;
    };

    report(1, criterion1(c1_state));
    report(2, criterion2());
    report(3, criterion3());
    report(4, criterion4());
    report(5, criterion5(c1_state));
    report(6, criterion6(c1_state));
    report(7, criterion7());
    report(8, criterion8());

    std::cout << (8 - failures) << "/8 criteria passed\n";
    return failures;
}

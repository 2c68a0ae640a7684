#include "outercolor/extension.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "outercolor/errors.hpp"
#include "outercolor/reduction.hpp"

namespace outercolor {

ColorPermutation::ColorPermutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    std::vector<char> seen(mapping_.size(), 0);
    for (int t : mapping_) {
        if (t < 0 || t >= size() || seen[static_cast<std::size_t>(t)])
            throw std::invalid_argument("color mapping is not a bijection on its palette");
        seen[static_cast<std::size_t>(t)] = 1;
    }
}

int ColorPermutation::operator()(int color) const {
    if (color < 0 || color >= size())
        throw std::out_of_range("color outside permutation domain");
    return mapping_[static_cast<std::size_t>(color)];
}

namespace {

int smallest_feasible(const Graph& g, const IncidenceColoring& c, const Incidence& inc) {
    const std::vector<int> f = feasible_colors(g, c, inc);
    if (f.empty())
        throw ExtensionInvariantError("no feasible color for incidence (" +
                                      std::to_string(inc.tail) + "," +
                                      std::to_string(inc.head) + ")");
    return f.front();
}

int smallest_incoming(const Graph& g, const IncidenceColoring& c, int v) {
    const std::vector<int> in = incoming_color_set(g, c, v);
    if (in.empty())
        throw ExtensionInvariantError("no incoming color at vertex " + std::to_string(v));
    return in.front();
}

}  // namespace

IncidenceColoring extend_case1(const Graph& g, IncidenceColoring c, int u, int v) {
    c.assign({v, u}, smallest_feasible(g, c, {v, u}));
    // reusing an incoming color keeps v's incoming set as it was
    c.assign({u, v}, smallest_incoming(g, c, v));
    return c;
}

IncidenceColoring extend_case2(const Graph& g, IncidenceColoring c, int u, int v, int w,
                               int x) {
    c.assign({w, u}, smallest_feasible(g, c, {w, u}));
    c.assign({u, w}, smallest_incoming(g, c, w));
    // the color already pointing at v from x can often point at it from u
    // too; when blocked, fall back to the smallest feasible color
    const std::vector<int> feas = feasible_colors(g, c, {u, v});
    if (feas.empty())
        throw ExtensionInvariantError("no feasible color for incidence (" +
                                      std::to_string(u) + "," + std::to_string(v) + ")");
    const std::optional<int> reuse = c.color({x, v});
    const bool reusable =
        reuse && std::binary_search(feas.begin(), feas.end(), *reuse);
    c.assign({u, v}, reusable ? *reuse : feas.front());
    c.assign({v, u}, smallest_feasible(g, c, {v, u}));
    return c;
}

IncidenceColoring extend_case3(const Graph& g, IncidenceColoring c, int u, int v, int w) {
    const std::optional<int> alpha = c.color({v, w});
    const std::optional<int> beta = c.color({w, v});
    if (!alpha || !beta)
        throw ExtensionInvariantError("triangle edge uncolored before extension at vertex " +
                                      std::to_string(u));
    // both colors are already incoming at their heads, so neither incoming
    // set grows; they differ because the two orientations interfere
    c.assign({u, w}, *alpha);
    c.assign({u, v}, *beta);
    c.assign({v, u}, smallest_feasible(g, c, {v, u}));
    c.assign({w, u}, smallest_feasible(g, c, {w, u}));
    return c;
}

ColorPermutation avoiding_permutation(int alpha, int gamma, int beta, int delta, int k) {
    if (k < 4)
        throw std::invalid_argument("avoiding permutation needs a palette of at least 4");
    for (int col : {alpha, gamma, beta, delta})
        if (col < 0 || col >= k) throw std::invalid_argument("color outside palette");

    const auto avoided = [alpha, gamma](int col) { return col == alpha || col == gamma; };
    std::vector<int> mapping(static_cast<std::size_t>(k));
    if (!avoided(beta) && !avoided(delta)) {
        std::iota(mapping.begin(), mapping.end(), 0);
        return ColorPermutation(std::move(mapping));
    }

    // two smallest colors outside {alpha, gamma}; k >= 4 guarantees both
    int t1 = 0;
    while (avoided(t1)) ++t1;
    int t2 = t1 + 1;
    while (avoided(t2)) ++t2;

    std::fill(mapping.begin(), mapping.end(), -1);
    mapping[static_cast<std::size_t>(beta)] = t1;
    mapping[static_cast<std::size_t>(delta)] = beta == delta ? t1 : t2;
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    used[static_cast<std::size_t>(t1)] = 1;
    if (beta != delta) used[static_cast<std::size_t>(t2)] = 1;
    int t = 0;
    for (int s = 0; s < k; ++s) {
        if (mapping[static_cast<std::size_t>(s)] >= 0) continue;
        while (used[static_cast<std::size_t>(t)]) ++t;
        mapping[static_cast<std::size_t>(s)] = t;
        used[static_cast<std::size_t>(t)] = 1;
    }
    return ColorPermutation(std::move(mapping));
}

IncidenceColoring apply_color_permutation(const IncidenceColoring& c,
                                          const ColorPermutation& p) {
    IncidenceColoring out(c.palette_size(), c.incoming_bound());
    for (const auto& [inc, col] : c.assignment()) out.assign(inc, p(col));
    return out;
}

IncidenceColoring extend_case4(const Graph& g, IncidenceColoring c_v,
                               IncidenceColoring c_w, int u, int v, int w) {
    const int k = c_v.palette_size();

    const int alpha = smallest_feasible(g, c_v, {v, u});
    c_v.assign({v, u}, alpha);
    const std::vector<int> in_v = incoming_color_set(g, c_v, v);
    const int gamma = in_v.empty() ? smallest_feasible(g, c_v, {u, v}) : in_v.front();
    c_v.assign({u, v}, gamma);

    const int beta = smallest_feasible(g, c_w, {w, u});
    c_w.assign({w, u}, beta);
    const std::vector<int> in_w = incoming_color_set(g, c_w, w);
    const int delta = in_w.empty() ? smallest_feasible(g, c_w, {u, w}) : in_w.front();
    c_w.assign({u, w}, delta);

    // relabel the entire w side so its colors at u dodge the v side's
    const ColorPermutation pi = avoiding_permutation(alpha, gamma, beta, delta, k);
    const IncidenceColoring side = apply_color_permutation(c_w, pi);
    for (const auto& [inc, col] : side.assignment()) c_v.assign(inc, col);
    return c_v;
}

IncidenceColoring color_base_component(const Graph& g, const SolverConfig& cfg) {
    if (g.max_degree() > 2)
        throw std::invalid_argument("base colorer only handles paths, cycles, and lone vertices");
    if (!is_connected(g))
        throw std::invalid_argument("base colorer requires a connected graph");

    IncidenceColoring c(cfg.k, cfg.l);
    if (g.edge_count() == 0) return c;  // a lone vertex

    const std::vector<int> verts = g.vertices();
    const int n = g.vertex_count();
    std::vector<int> ends;
    for (int v : verts)
        if (g.degree(v) == 1) ends.push_back(v);
    const bool cycle = ends.empty();
    if (cfg.k < (cycle ? 4 : 3))
        throw std::invalid_argument("palette too small for the base pattern");

    std::vector<int> walk;
    walk.reserve(static_cast<std::size_t>(n));
    walk.push_back(cycle ? verts.front() : ends.front());
    int prev = -1;
    while (static_cast<int>(walk.size()) < n) {
        const auto nb = g.neighbors(walk.back());
        const int nxt = nb.front() == prev ? nb.back() : nb.front();
        prev = walk.back();
        walk.push_back(nxt);
    }

    if (!cycle) {
        for (int i = 0; i + 1 < n; ++i) {
            c.assign({walk[i], walk[i + 1]}, i % 3);
            c.assign({walk[i + 1], walk[i]}, (i + 2) % 3);
        }
        return c;
    }

    // the sliding 3-color pattern closes up exactly when 3 divides n;
    // otherwise leave a 4-edge window and search it with a 4th color
    const int patterned = n % 3 == 0 ? n : n - 4;
    for (int i = 0; i < patterned; ++i) {
        const int a = walk[static_cast<std::size_t>(i)];
        const int b = walk[static_cast<std::size_t>((i + 1) % n)];
        c.assign({a, b}, i % 3);
        c.assign({b, a}, (i + 2) % 3);
    }
    if (patterned == n) return c;

    std::vector<Incidence> window;
    for (int i = patterned; i < n; ++i) {
        const int a = walk[static_cast<std::size_t>(i)];
        const int b = walk[static_cast<std::size_t>((i + 1) % n)];
        window.push_back({a, b});
        window.push_back({b, a});
    }
    std::function<bool(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == window.size()) return true;
        for (int col : feasible_colors(g, c, window[idx])) {
            if (col > 3) break;
            c.assign(window[idx], col);
            if (fill(idx + 1)) return true;
            c.erase(window[idx]);
        }
        return false;
    };
    if (!fill(0))
        throw ExtensionInvariantError("cycle window admits no 4-color completion");
    return c;
}

namespace {

struct Node {
    Graph graph;
    std::optional<Configuration> config;  // nullopt: base component
    std::vector<std::size_t> children;
};

int peeled_vertex(const Configuration& conf) {
    return std::visit([](const auto& shape) { return shape.u; }, conf);
}

IncidenceColoring solve_component(Graph comp, const SolverConfig& cfg) {
    // Pass one peels configurations until every leaf is a path, cycle, or
    // lone vertex; pass two replays them backwards through the extension
    // steps.  Children always sit at larger indices than their parent.
    std::vector<Node> nodes;
    nodes.push_back({std::move(comp), std::nullopt, {}});
    std::vector<std::size_t> work{0};

    while (!work.empty()) {
        const std::size_t idx = work.back();
        work.pop_back();
        if (nodes[idx].graph.max_degree() <= 2) continue;

        if (!outerplanar_screen(nodes[idx].graph))
            throw NotOuterplanarError(
                "component with " + std::to_string(nodes[idx].graph.vertex_count()) +
                " vertices has " + std::to_string(nodes[idx].graph.edge_count()) +
                " edges, over the outerplanar bound");
        std::optional<Configuration> found = find_configuration(nodes[idx].graph);
        if (!found)
            throw NotReducibleError("component has no reducible shape, so it is not outerplanar");
        nodes[idx].config = found;

        Graph rest = nodes[idx].graph.without_vertex(peeled_vertex(*found));
        ComponentPartition parts = connected_components(rest);
        std::vector<Graph> kids;
        if (parts.blocks.size() == 1) {
            kids.push_back(std::move(rest));
        } else {
            kids.reserve(parts.blocks.size());
            for (const auto& block : parts.blocks) kids.push_back(induced_subgraph(rest, block));
        }
        for (Graph& kid : kids) {
            const std::size_t child = nodes.size();
            nodes.push_back({std::move(kid), std::nullopt, {}});
            nodes[idx].children.push_back(child);
            work.push_back(child);
        }
    }

    std::vector<IncidenceColoring> done(nodes.size(), IncidenceColoring(cfg.k, cfg.l));
    for (std::size_t idx = nodes.size(); idx-- > 0;) {
        Node& node = nodes[idx];
        if (!node.config) {
            done[idx] = color_base_component(node.graph, cfg);
            continue;
        }
        if (const Hinge* h = std::get_if<Hinge>(&*node.config)) {
            if (node.children.size() != 2)
                throw ExtensionInvariantError("severed graph did not fall into two parts");
            const std::size_t a = node.children[0], b = node.children[1];
            const bool a_holds_v = nodes[a].graph.has_vertex(h->v);
            IncidenceColoring cv = std::move(done[a_holds_v ? a : b]);
            IncidenceColoring cw = std::move(done[a_holds_v ? b : a]);
            done[idx] =
                extend_case4(node.graph, std::move(cv), std::move(cw), h->u, h->v, h->w);
            continue;
        }
        IncidenceColoring merged = std::move(done[node.children[0]]);
        for (std::size_t i = 1; i < node.children.size(); ++i)
            for (const auto& [inc, col] : done[node.children[i]].assignment())
                merged.assign(inc, col);
        done[idx] = std::visit(
            [&](const auto& shape) -> IncidenceColoring {
                using S = std::decay_t<decltype(shape)>;
                if constexpr (std::is_same_v<S, PendantVertex>)
                    return extend_case1(node.graph, std::move(merged), shape.u, shape.v);
                else if constexpr (std::is_same_v<S, TriangleApex>)
                    return extend_case3(node.graph, std::move(merged), shape.u, shape.v,
                                        shape.w);
                else if constexpr (std::is_same_v<S, ChainPair>)
                    return extend_case2(node.graph, std::move(merged), shape.u, shape.v,
                                        shape.w, shape.x);
                else
                    throw ExtensionInvariantError("unhandled configuration shape");
            },
            *node.config);
    }
    return std::move(done[0]);
}

}  // namespace

SolveResult solve(const Graph& g) {
    const SolverConfig cfg{std::max(g.max_degree(), 1) + 2, 2};
    IncidenceColoring total(cfg.k, cfg.l);
    for (const std::vector<int>& block : connected_components(g).blocks) {
        IncidenceColoring part = solve_component(induced_subgraph(g, block), cfg);
        for (const auto& [inc, col] : part.assignment()) total.assign(inc, col);
    }
    return {cfg.k, std::move(total)};
}

}  // namespace outercolor

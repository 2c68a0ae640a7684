#include "outercolor/reduction.hpp"

#include <stdexcept>

namespace outercolor {

std::optional<Configuration> find_configuration(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("find_configuration requires a connected graph");
    for (int u : g.vertices())
        if (g.degree(u) == 1) return PendantVertex{u, g.neighbors(u)[0]};

    for (int u : g.vertices()) {
        if (g.degree(u) != 2) continue;
        auto nb = g.neighbors(u);
        if (g.has_edge(nb[0], nb[1])) return TriangleApex{u, nb[0], nb[1]};
    }

    for (int u : g.vertices()) {
        if (g.degree(u) != 2) continue;
        for (int v : g.neighbors(u)) {
            if (g.degree(v) != 2) continue;
            auto nbu = g.neighbors(u);
            auto nbv = g.neighbors(v);
            int w = nbu[0] == v ? nbu[1] : nbu[0];
            int x = nbv[0] == u ? nbv[1] : nbv[0];
            return ChainPair{u, v, w, x};
        }
    }

    for (int u : cut_vertices(g)) {
        if (g.degree(u) != 2) continue;
        auto nb = g.neighbors(u);
        return Hinge{u, nb[0], nb[1]};
    }

    return std::nullopt;
}

bool outerplanar_screen(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) return true;
    if (g.edge_count() <= 2 * n - 3) return true;
    return !is_connected(g);
}

}  // namespace outercolor

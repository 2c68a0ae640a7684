#include "outercolor/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "outercolor/incidence.hpp"

namespace outercolor {

std::optional<IncidenceColoring> exists_kl_coloring(const Graph& g, int k, int l,
                                                    std::size_t max_incidences) {
    if (k < 0 || l < 0) throw std::invalid_argument("negative palette or incoming bound");
    std::vector<Incidence> incs = enumerate_incidences(g);
    if (incs.size() > max_incidences)
        throw std::invalid_argument("graph too large for exhaustive coloring search");
    if (incs.empty()) return IncidenceColoring(k, l);
    if (k == 0 || l == 0) return std::nullopt;

    // Most-interfered incidences first, so dead ends surface early.
    std::vector<int> inter(incs.size(), 0);
    for (std::size_t i = 0; i < incs.size(); ++i)
        for (std::size_t j = 0; j < incs.size(); ++j)
            if (incidences_adjacent(incs[i], incs[j])) ++inter[i];
    std::vector<std::size_t> order(incs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&inter](std::size_t a, std::size_t b) { return inter[a] > inter[b]; });

    // `used` counts colors introduced so far; allowing at most one fresh
    // color per step fixes the palette permutation and cuts the search by
    // a factor of k!.
    IncidenceColoring c(k, l);
    std::function<bool(std::size_t, int)> step = [&](std::size_t idx, int used) {
        if (idx == order.size()) return true;
        const Incidence& inc = incs[order[idx]];
        for (int col : feasible_colors(g, c, inc)) {
            if (col > used) break;
            c.assign(inc, col);
            if (step(idx + 1, used + (col == used ? 1 : 0))) return true;
            c.erase(inc);
        }
        return false;
    };
    if (step(0, 0)) return c;
    return std::nullopt;
}

int min_incidence_k(const Graph& g, int l, std::size_t max_incidences) {
    if (l < 1) throw std::invalid_argument("incoming bound must be at least 1");
    if (g.edge_count() == 0) return 0;
    const int n = static_cast<int>(g.vertex_count());
    for (int k = g.max_degree() + 1; k <= n; ++k)
        if (exists_kl_coloring(g, k, l, max_incidences)) return k;
    throw std::logic_error("one color per vertex always suffices, search must hit");
}

ConnectedGraphStream::ConnectedGraphStream(int n) : n_(n) {
    if (n < 1 || n > 7) throw std::invalid_argument("graph stream supports 1..7 vertices");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots_.push_back({i, j});
    mask_limit_ = 1u << slots_.size();
}

std::optional<Graph> ConnectedGraphStream::next() {
    const std::uint8_t all = static_cast<std::uint8_t>((1u << n_) - 1u);
    while (cursor_ < mask_limit_) {
        const std::uint32_t mask = cursor_++;

        std::array<std::uint8_t, 7> adj{};
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            if (!(mask >> s & 1u)) continue;
            adj[static_cast<std::size_t>(slots_[s].first)] |=
                static_cast<std::uint8_t>(1u << slots_[s].second);
            adj[static_cast<std::size_t>(slots_[s].second)] |=
                static_cast<std::uint8_t>(1u << slots_[s].first);
        }
        std::uint8_t reach = 1, frontier = 1;
        while (frontier) {
            std::uint8_t nxt = 0;
            for (int v = 0; v < n_; ++v)
                if (frontier >> v & 1u) nxt |= adj[static_cast<std::size_t>(v)];
            frontier = static_cast<std::uint8_t>(nxt & ~reach);
            reach |= frontier;
        }
        if (reach != all) continue;

        std::vector<std::pair<int, int>> edges;
        for (std::size_t s = 0; s < slots_.size(); ++s)
            if (mask >> s & 1u) edges.push_back(slots_[s]);
        std::vector<int> verts(static_cast<std::size_t>(n_));
        std::iota(verts.begin(), verts.end(), 0);
        ++emitted_;
        return Graph::from_edges(edges, verts);
    }
    return std::nullopt;
}

namespace {

// Branch-set search works on bitmasks over compressed vertex indices.
struct MinorContext {
    int n = 0;
    std::vector<std::uint16_t> adj;    // per vertex
    std::vector<std::uint16_t> nbr;    // per connected mask: neighbourhood outside it
    std::vector<std::uint16_t> conn;   // connected nonempty masks, ascending
};

bool mask_connected(const std::vector<std::uint16_t>& adj, std::uint16_t mask) {
    const std::uint16_t start = static_cast<std::uint16_t>(mask & (~mask + 1u));
    std::uint16_t reach = start, frontier = start;
    while (frontier) {
        std::uint16_t nxt = 0;
        std::uint16_t f = frontier;
        while (f) {
            nxt |= adj[static_cast<std::size_t>(std::countr_zero(f))];
            f &= static_cast<std::uint16_t>(f - 1);
        }
        frontier = static_cast<std::uint16_t>(nxt & mask & ~reach);
        reach |= frontier;
    }
    return reach == mask;
}

// Four disjoint connected branch sets, pairwise joined by an edge.
bool has_k4_minor(const MinorContext& cx) {
    std::vector<std::uint16_t> sets;
    for (std::uint16_t m : cx.conn)
        if (std::popcount(m) <= cx.n - 3) sets.push_back(m);
    const std::size_t s = sets.size();
    if (s < 4) return false;

    const std::size_t words = (s + 63) / 64;
    std::vector<std::uint64_t> compat(s * words, 0);
    auto row = [&compat, words](std::size_t i) { return compat.data() + i * words; };
    auto set_bit = [](std::uint64_t* r, std::size_t idx) { r[idx >> 6] |= 1ull << (idx & 63); };
    auto test_bit = [](const std::uint64_t* r, std::size_t idx) {
        return (r[idx >> 6] >> (idx & 63)) & 1u;
    };
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            if (!(sets[i] & sets[j]) && (cx.nbr[sets[i]] & sets[j])) {
                set_bit(row(i), j);
                set_bit(row(j), i);
            }

    // zero bits [0, idx] so that scans below the pivot never repeat work
    auto clear_upto = [](std::vector<std::uint64_t>& v, std::size_t idx) {
        const std::size_t w = idx >> 6, b = idx & 63;
        for (std::size_t a = 0; a < w; ++a) v[a] = 0;
        v[w] &= b == 63 ? 0ull : ~((1ull << (b + 1)) - 1ull);
    };

    std::vector<std::uint64_t> both(words), three(words);
    for (std::size_t i = 0; i + 3 < s; ++i) {
        for (std::size_t j = i + 1; j + 2 < s; ++j) {
            if (!test_bit(row(i), j)) continue;
            for (std::size_t w = 0; w < words; ++w) both[w] = row(i)[w] & row(j)[w];
            clear_upto(both, j);
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t bits = both[w];
                while (bits) {
                    const std::size_t t = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    for (std::size_t w2 = 0; w2 < words; ++w2)
                        three[w2] = both[w2] & row(t)[w2];
                    clear_upto(three, t);
                    for (std::size_t w2 = 0; w2 < words; ++w2)
                        if (three[w2]) return true;
                }
            }
        }
    }
    return false;
}

bool pick_disjoint(const std::vector<std::uint16_t>& cands, std::size_t start,
                   std::uint16_t used, int need) {
    if (need == 0) return true;
    for (std::size_t t = start; t < cands.size(); ++t) {
        if (cands[t] & used) continue;
        if (pick_disjoint(cands, t + 1, static_cast<std::uint16_t>(used | cands[t]), need - 1))
            return true;
    }
    return false;
}

// Two disjoint connected hub sets plus three disjoint connected linker sets,
// every linker joined to both hubs.  Hub-to-hub edges are allowed: a minor
// only needs the required adjacencies to be present.
bool has_k23_minor(const MinorContext& cx) {
    if (cx.n < 5) return false;
    const std::uint16_t full = static_cast<std::uint16_t>((1u << cx.n) - 1u);
    std::vector<std::uint16_t> hubs;
    for (std::uint16_t m : cx.conn)
        if (std::popcount(m) <= cx.n - 4) hubs.push_back(m);

    std::vector<std::uint16_t> cands;
    for (std::size_t a = 0; a < hubs.size(); ++a) {
        for (std::size_t b = a + 1; b < hubs.size(); ++b) {
            const std::uint16_t A = hubs[a], B = hubs[b];
            if (A & B) continue;
            const std::uint16_t rest = static_cast<std::uint16_t>(full & ~(A | B));
            const std::uint16_t na = static_cast<std::uint16_t>(cx.nbr[A] & rest);
            const std::uint16_t nb = static_cast<std::uint16_t>(cx.nbr[B] & rest);
            // three disjoint linkers each take a vertex from both neighbourhoods
            if (std::popcount(na) < 3 || std::popcount(nb) < 3) continue;
            cands.clear();
            for (std::uint16_t m : cx.conn)
                if (!(m & ~rest) && (m & na) && (m & nb)) cands.push_back(m);
            if (cands.size() < 3) continue;
            if (pick_disjoint(cands, 0, 0, 3)) return true;
        }
    }
    return false;
}

}  // namespace

bool is_outerplanar_exact(const Graph& g) {
    const std::vector<int> verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    if (n > 10) throw std::invalid_argument("exact outerplanarity test capped at 10 vertices");
    if (n <= 3) return true;
    if (g.edge_count() > 2 * n - 3) return false;

    MinorContext cx;
    cx.n = n;
    cx.adj.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> index(static_cast<std::size_t>(g.id_bound()), -1);
    for (int i = 0; i < n; ++i) index[static_cast<std::size_t>(verts[i])] = i;
    for (int i = 0; i < n; ++i)
        for (int w : g.neighbors(verts[i]))
            cx.adj[static_cast<std::size_t>(i)] |=
                static_cast<std::uint16_t>(1u << index[static_cast<std::size_t>(w)]);

    cx.nbr.assign(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const std::uint16_t m = static_cast<std::uint16_t>(mask);
        if (!mask_connected(cx.adj, m)) continue;
        cx.conn.push_back(m);
        std::uint16_t u = 0;
        std::uint16_t f = m;
        while (f) {
            u |= cx.adj[static_cast<std::size_t>(std::countr_zero(f))];
            f &= static_cast<std::uint16_t>(f - 1);
        }
        cx.nbr[m] = static_cast<std::uint16_t>(u & ~m);
    }

    return !has_k4_minor(cx) && !has_k23_minor(cx);
}

}  // namespace outercolor

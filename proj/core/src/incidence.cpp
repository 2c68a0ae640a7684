#include "outercolor/incidence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace outercolor {

bool incidences_adjacent(const Incidence& a, const Incidence& b) noexcept {
    if (a == b) return false;
    return a.tail == b.tail || a.head == b.tail || a.tail == b.head;
}

std::vector<Incidence> enumerate_incidences(const Graph& g) {
    std::vector<Incidence> out;
    out.reserve(2 * g.edge_count());
    for (int v : g.vertices())
        for (int w : g.neighbors(v)) out.push_back({v, w});
    return out;
}

IncidenceColoring::IncidenceColoring(int palette_size, int incoming_bound)
    : palette_size_(palette_size), incoming_bound_(incoming_bound) {
    if (palette_size < 0) throw std::invalid_argument("negative palette size");
    if (incoming_bound < 0) throw std::invalid_argument("negative incoming bound");
}

std::optional<int> IncidenceColoring::color(const Incidence& inc) const {
    auto it = assignment_.find(inc);
    if (it == assignment_.end()) return std::nullopt;
    return it->second;
}

void IncidenceColoring::assign(const Incidence& inc, int color) { assignment_[inc] = color; }

void IncidenceColoring::erase(const Incidence& inc) { assignment_.erase(inc); }

namespace {

// Assigned incidences bucketed by endpoint, for pair scans that only ever
// compare incidences sharing a vertex.
struct Buckets {
    // by_tail[v] / by_head[v]: (other endpoint, color), ascending by endpoint.
    std::map<int, std::vector<std::pair<int, int>>> by_tail;
    std::map<int, std::vector<std::pair<int, int>>> by_head;
};

Buckets bucket_assignment(const IncidenceColoring& c) {
    Buckets b;
    for (const auto& [inc, col] : c.assignment()) {
        b.by_tail[inc.tail].push_back({inc.head, col});
        b.by_head[inc.head].push_back({inc.tail, col});
    }
    return b;
}

}  // namespace

VerificationReport verify_coloring(const Graph& g, const IncidenceColoring& c,
                                   bool require_total) {
    VerificationReport report;
    const int k = c.palette_size();
    const int l = c.incoming_bound();

    // Foreign entries poison the pair scans below, so weed them out first and
    // run the rest over genuine incidences only.
    IncidenceColoring clean(k, l);
    for (const auto& [inc, col] : c.assignment()) {
        if (g.has_edge(inc.tail, inc.head))
            clean.assign(inc, col);
        else
            report.violations.push_back(ForeignIncidence{inc});
    }

    for (const auto& [inc, col] : clean.assignment())
        if (col < 0 || col >= k) report.violations.push_back(PaletteOverflow{inc, col});

    // Interference: equal colors on two incidences sharing a tail, or where
    // one's head is the other's tail.  Both scans pivot on a shared vertex.
    // (v,w) vs (w,v) interferes through both of its endpoints, so pairs are
    // canonicalized and deduplicated.
    Buckets b = bucket_assignment(clean);
    std::set<std::pair<Incidence, Incidence>> conflicts;
    auto record = [&conflicts](Incidence a, Incidence bb) {
        if (bb < a) std::swap(a, bb);
        conflicts.insert({a, bb});
    };
    for (const auto& [v, outs] : b.by_tail) {
        for (std::size_t i = 0; i < outs.size(); ++i)
            for (std::size_t j = i + 1; j < outs.size(); ++j)
                if (outs[i].second == outs[j].second)
                    record({v, outs[i].first}, {v, outs[j].first});
        // incidences arriving at v against incidences leaving v
        auto it = b.by_head.find(v);
        if (it == b.by_head.end()) continue;
        for (const auto& [w, cin] : it->second)
            for (const auto& [x, cout] : outs)
                if (cin == cout) record({w, v}, {v, x});
    }
    for (const auto& [a, bb] : conflicts)
        report.violations.push_back(AdjacencyConflict{a, bb});

    for (const auto& [v, ins] : b.by_head) {
        std::vector<int> colors;
        for (const auto& [w, col] : ins) colors.push_back(col);
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        if (static_cast<int>(colors.size()) > l)
            report.violations.push_back(IncomingOverflow{v, std::move(colors)});
    }

    if (require_total)
        for (const Incidence& inc : enumerate_incidences(g))
            if (!clean.color(inc)) report.violations.push_back(UncoloredIncidence{inc});

    return report;
}

std::vector<int> incoming_color_set(const Graph& g, const IncidenceColoring& c, int v) {
    std::vector<int> colors;
    for (int w : g.neighbors(v))
        if (auto col = c.color({w, v})) colors.push_back(*col);
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    return colors;
}

std::vector<int> feasible_colors(const Graph& g, const IncidenceColoring& c,
                                 const Incidence& inc) {
    const int k = c.palette_size();
    std::vector<char> banned(static_cast<std::size_t>(std::max(k, 1)), 0);
    auto ban = [&banned, k](std::optional<int> col) {
        if (col && *col >= 0 && *col < k) banned[static_cast<std::size_t>(*col)] = 1;
    };
    for (int w : g.neighbors(inc.tail)) {
        if (w != inc.head) ban(c.color({inc.tail, w}));  // shared tail
        ban(c.color({w, inc.tail}));                     // head meets our tail
    }
    for (int w : g.neighbors(inc.head)) ban(c.color({inc.head, w}));  // tail meets our head

    std::vector<int> incoming = incoming_color_set(g, c, inc.head);
    const bool clamp = static_cast<int>(incoming.size()) >= c.incoming_bound();

    std::vector<int> out;
    for (int col = 0; col < k; ++col) {
        if (banned[static_cast<std::size_t>(col)]) continue;
        if (clamp && !std::binary_search(incoming.begin(), incoming.end(), col)) continue;
        out.push_back(col);
    }
    return out;
}

}  // namespace outercolor

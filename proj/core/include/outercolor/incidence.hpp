#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "outercolor/graph.hpp"

namespace outercolor {

// Orientation (tail, head) of an edge: the incidence of vertex `tail` with
// edge {tail, head}.  A color on it counts toward the incoming color set of
// `head`.
struct Incidence {
    int tail = 0;
    int head = 0;
    friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

// Two distinct incidences interfere exactly when the tails coincide, or the
// head of one is the tail of the other.  Sharing only heads does not
// interfere, which is what makes the incoming bound a real constraint.
bool incidences_adjacent(const Incidence& a, const Incidence& b) noexcept;

// Both orientations of every edge, ordered by (tail, head).  Size 2m.
std::vector<Incidence> enumerate_incidences(const Graph& g);

// A partial assignment of colors to incidences, carrying its palette size k
// and the per-vertex incoming bound l.  Assignments are not validated here;
// verify_coloring reports anything out of line.
class IncidenceColoring {
public:
    explicit IncidenceColoring(int palette_size, int incoming_bound = 2);

    int palette_size() const noexcept { return palette_size_; }
    int incoming_bound() const noexcept { return incoming_bound_; }

    std::optional<int> color(const Incidence& inc) const;
    void assign(const Incidence& inc, int color);  // overwrites
    void erase(const Incidence& inc);
    std::size_t size() const noexcept { return assignment_.size(); }

    // Ordered by incidence, so iteration is deterministic.
    const std::map<Incidence, int>& assignment() const noexcept { return assignment_; }

    bool operator==(const IncidenceColoring&) const = default;

private:
    int palette_size_;
    int incoming_bound_;
    std::map<Incidence, int> assignment_;
};

// Violation records.  first < second in every conflict pair.
struct AdjacencyConflict {
    Incidence first;
    Incidence second;
    bool operator==(const AdjacencyConflict&) const = default;
};
struct PaletteOverflow {
    Incidence incidence;
    int color = 0;
    bool operator==(const PaletteOverflow&) const = default;
};
struct IncomingOverflow {
    int vertex = 0;
    std::vector<int> colors;  // the distinct incoming colors, ascending
    bool operator==(const IncomingOverflow&) const = default;
};
struct UncoloredIncidence {
    Incidence incidence;
    bool operator==(const UncoloredIncidence&) const = default;
};
// The assignment mentions a pair that is not an incidence of the graph.
struct ForeignIncidence {
    Incidence incidence;
    bool operator==(const ForeignIncidence&) const = default;
};

using Violation = std::variant<ForeignIncidence, PaletteOverflow, AdjacencyConflict,
                               IncomingOverflow, UncoloredIncidence>;

struct VerificationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

// Checks a coloring against the graph and reports every violation: foreign
// incidences, colors outside [0,k), equal colors on interfering incidences,
// vertices whose incoming colors exceed l, and (when require_total) missing
// incidences.  The report depends only on the assignment as a set, never on
// insertion order, and is empty iff the coloring is a valid total one.
VerificationReport verify_coloring(const Graph& g, const IncidenceColoring& c,
                                   bool require_total = true);

// Distinct colors of assigned incidences pointing at v, ascending.
std::vector<int> incoming_color_set(const Graph& g, const IncidenceColoring& c, int v);

// Colors that keep the coloring valid when put on the uncolored incidence
// `inc`: each must differ from every color on an interfering assigned
// incidence, and once head(inc) already has l distinct incoming colors only
// those may be used.  Ascending.
std::vector<int> feasible_colors(const Graph& g, const IncidenceColoring& c,
                                 const Incidence& inc);

}  // namespace outercolor

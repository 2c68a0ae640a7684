#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "outercolor/graph.hpp"
#include "outercolor/incidence.hpp"

namespace outercolor {

// Graph text format: one edge per line as two decimal vertex ids, lines
// starting with '#' ignored, blank lines skipped, and an optional header
// "v <n>" declaring that vertices 0..n-1 exist even when no edge covers
// them.  Malformed lines raise MalformedInputError naming the line number.
Graph parse_edge_list(const std::string& text);

// Inverse of parse_edge_list: "v <bound>" first when the graph has an
// isolated vertex, then edges ascending.  parse(emit(g)) == g whenever the
// graph's ids are gap-free (the format cannot express an absent id below an
// isolated one).
std::string emit_edge_list(const Graph& g);

// Coloring JSON: {"k", "l", "colors": [{"tail", "head", "color"}...],
// "meta": {"delta", "seed"?}} with entries ordered by (tail, head).  The
// seed field appears only when one is supplied.
std::string emit_coloring(const Graph& g, const IncidenceColoring& c,
                          std::optional<std::uint64_t> seed = std::nullopt);

// Reads a coloring back; k and l come from the document.  Anything that is
// not JSON of the shape above raises MalformedInputError.
IncidenceColoring parse_coloring(const std::string& text);

// One human-readable line per violation, e.g. for CLI output.
std::string describe_violation(const Violation& violation);

}  // namespace outercolor

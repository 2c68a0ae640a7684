#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "outercolor/graph.hpp"
#include "outercolor/incidence.hpp"

namespace outercolor {

// Exhaustive-search counterparts to the constructive solver.  These are
// deliberately independent of it: they decide colorability by raw
// backtracking and outerplanarity by forbidden-minor search, so the two
// sides can be played against each other in tests.

// A total incidence coloring of g with k colors where every vertex sees at
// most l distinct incoming colors, or nullopt when none exists.  Exact
// backtracking over the incidences (most-constrained first, palette symmetry
// broken), so the graph must be small: more than max_incidences incidences
// (2 per edge) is refused with invalid_argument.
std::optional<IncidenceColoring> exists_kl_coloring(const Graph& g, int k, int l,
                                                    std::size_t max_incidences = 40);

// Smallest k for which exists_kl_coloring(g, k, l) holds; 0 for edgeless
// graphs.  Requires l >= 1 (coloring every incidence (v,w) with a color
// owned by w shows n palette colors always suffice, so the search is
// bounded).  Same size cap as exists_kl_coloring.
int min_incidence_k(const Graph& g, int l = 2, std::size_t max_incidences = 40);

// Streams every connected simple graph on the labelled vertex set
// {0, ..., n-1}, in increasing order of edge-set bitmask (edge slots
// (0,1), (0,2), ..., (n-2,n-1)).  n is capped at 7; the n=7 run already
// yields 1,866,256 graphs.
class ConnectedGraphStream {
public:
    explicit ConnectedGraphStream(int n);  // 1 <= n <= 7

    std::optional<Graph> next();
    std::uint64_t emitted() const noexcept { return emitted_; }

private:
    int n_;
    std::vector<std::pair<int, int>> slots_;
    std::uint32_t cursor_ = 0;
    std::uint32_t mask_limit_ = 0;
    std::uint64_t emitted_ = 0;
};

// Minor-exclusion test: a graph is outerplanar iff it has neither a K4 nor
// a K2,3 minor.  Minors are sought directly as families of disjoint
// connected branch sets with the required adjacencies, which keeps the
// check exact; vertex count is capped at 10.
bool is_outerplanar_exact(const Graph& g);

}  // namespace outercolor

#pragma once

#include <vector>

#include "outercolor/graph.hpp"
#include "outercolor/incidence.hpp"

namespace outercolor {

// Palette parameters for one solve run.  k is fixed once from the root
// graph's maximum degree and reused unchanged at every level of the
// induction: subgraphs only ever have smaller degrees, so the root palette
// always suffices.
struct SolverConfig {
    int k = 3;  // palette size; max(max_degree, 1) + 2 at the root
    int l = 2;  // incoming bound
};

// Bijection on the palette [0, k).
class ColorPermutation {
public:
    explicit ColorPermutation(std::vector<int> mapping);  // must be a bijection
    int operator()(int color) const;  // out_of_range outside the domain
    int size() const noexcept { return static_cast<int>(mapping_.size()); }
    const std::vector<int>& mapping() const noexcept { return mapping_; }

private:
    std::vector<int> mapping_;
};

// Total coloring of a connected graph with max degree <= 2 (isolated
// vertex, path, or cycle).  Paths use the 3-color sliding pattern; cycles
// use it too when their length divides by 3 and otherwise patch a trailing
// window of at most 4 edges by exhaustive search over colors {0,1,2,3}.
// Requires cfg.k >= 3 for paths and >= 4 for cycles; anything with a
// degree-3 vertex or a disconnected input is a contract violation.
IncidenceColoring color_base_component(const Graph& g, const SolverConfig& cfg);

// The four extension steps.  Each takes the full graph g, a valid total
// coloring of g minus the peeled vertex u (for the split step, one coloring
// per side), and the witness vertices; each returns the coloring extended to
// all of g.  A feasible or incoming set that the counting arguments promise
// to be nonempty turning up empty raises ExtensionInvariantError: that is a
// bug or a violated precondition, never an input condition.

// deg(u)=1 with neighbor v: (v,vu) takes the smallest feasible color, then
// (u,uv) reuses the smallest color already incoming at v, so v's incoming
// set does not grow.
IncidenceColoring extend_case1(const Graph& g, IncidenceColoring c, int u, int v);

// Adjacent degree-2 pair u,v with outer neighbors w (of u) and x (of v),
// w != x, u peeled: (w,wu) smallest feasible, (u,uw) smallest incoming at
// w, (u,uv) prefers the color of (x,xv) when feasible, (v,vu) smallest
// feasible.  Needs k >= 5, which holds whenever some vertex has degree 3.
IncidenceColoring extend_case2(const Graph& g, IncidenceColoring c, int u, int v, int w,
                               int x);

// deg(u)=2 with adjacent neighbors v,w: (u,uw) copies the color of (v,vw)
// and (u,uv) the color of (w,wv) — both already incoming at their heads —
// then (v,vu) and (w,wu) take smallest feasible colors.
IncidenceColoring extend_case3(const Graph& g, IncidenceColoring c, int u, int v, int w);

// A palette bijection sending beta and delta away from {alpha, gamma}:
// identity when they are already outside, otherwise beta and delta go to
// the two smallest colors outside {alpha, gamma} (one target when
// beta == delta) and the remaining colors fill in ascending.  k >= 4
// guarantees the targets exist; smaller k is a contract violation.
ColorPermutation avoiding_permutation(int alpha, int gamma, int beta, int delta, int k);

// Every assigned color x replaced by p(x).  Relabeling preserves validity:
// distinctness and incoming-set sizes are untouched.
IncidenceColoring apply_color_permutation(const IncidenceColoring& c,
                                          const ColorPermutation& p);

// deg(u)=2 cut vertex with neighbors v and w on different sides of g-u.
// Each side is extended independently ((v,vu) <- alpha feasible, (u,uv) <-
// gamma incoming at v, mirrored on the w side), then the whole w side is
// pushed through avoiding_permutation(alpha, gamma, beta, delta, k) and the
// sides merge; u ends with incoming set {alpha, pi(beta)}.  A side that is
// a single vertex has no incoming colors, so gamma (or delta) falls back to
// the smallest feasible color.
IncidenceColoring extend_case4(const Graph& g, IncidenceColoring c_v,
                               IncidenceColoring c_w, int u, int v, int w);

struct SolveResult {
    int k = 0;
    IncidenceColoring coloring;
};

// Colors any simple graph with palette k = max(max_degree, 1) + 2 and
// incoming bound 2, or proves the attempt hopeless: a connected component
// that beats the outerplanar edge bound raises NotOuterplanarError, and one
// where no reducible shape exists raises NotReducibleError — both certify
// the input is not outerplanar.  Components with max degree <= 2 go to
// color_base_component; the rest are peeled one configuration at a time
// with an explicit stack (no recursion), then re-extended in reverse.
// Deterministic: equal inputs give identical colorings.
SolveResult solve(const Graph& g);

}  // namespace outercolor

#pragma once

#include <cstdint>
#include <string>

#include "outercolor/graph.hpp"

namespace outercolor {

// Knobs for random outerplanar instances.  All randomness is drawn from a
// fixed, fully specified generator, so equal parameters give byte-equal
// graphs on every platform and build.
struct GeneratorParams {
    int n = 3;
    double chord_keep_probability = 1.0;
    double hull_delete_probability = 0.0;
    std::uint64_t seed = 0;
};

// The n-cycle 0..n-1 plus n-3 chords forming a uniformly random
// triangulation of the polygon (uniform over all Catalan(n-2) shapes, via
// ballot-sequence sampling).  Exactly 2n-3 edges.  n < 3 is refused with
// MalformedInputError.
Graph gen_maximal_outerplanar(int n, std::uint64_t seed);

// Thinned variant: starts from the same triangulation the seed dictates,
// keeps each chord with chord_keep_probability, then walks the hull edges
// in ascending order deleting each with hull_delete_probability unless the
// deletion would disconnect the graph.  Output is always connected and
// outerplanar.
Graph gen_outerplanar(const GeneratorParams& params);

// Named fixtures: "path", "cycle", "star", "fan" (path 0..n-2 plus a hub
// adjacent to all of it), "complete4" (K4, n ignored), "k23" (K2,3, n
// ignored; with complete4 a classical non-outerplanar obstruction).
// Unknown names and out-of-range n raise MalformedInputError.
Graph family(const std::string& name, int n);

}  // namespace outercolor

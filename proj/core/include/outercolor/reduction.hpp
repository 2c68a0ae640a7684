#pragma once

#include <optional>
#include <variant>

#include "outercolor/graph.hpp"

namespace outercolor {

// The four shapes the solver knows how to peel off.  Every connected
// outerplanar graph on >= 2 vertices contains at least one of them, so a
// graph where none is found is certified non-outerplanar.

// deg(u) == 1, v its neighbor.
struct PendantVertex {
    int u = -1, v = -1;
    bool operator==(const PendantVertex&) const = default;
};

// deg(u) == 2 with neighbors v < w that are themselves adjacent.
struct TriangleApex {
    int u = -1, v = -1, w = -1;
    bool operator==(const TriangleApex&) const = default;
};

// Adjacent u, v both of degree 2; w is u's other neighbor, x is v's.
// w != x always holds here: were they equal, u would be a TriangleApex,
// which is probed first.
struct ChainPair {
    int u = -1, v = -1, w = -1, x = -1;
    bool operator==(const ChainPair&) const = default;
};

// deg(u) == 2 and u is a cut vertex, so removing it leaves exactly two
// components; neighbor v < w, one per side.
struct Hinge {
    int u = -1, v = -1, w = -1;
    bool operator==(const Hinge&) const = default;
};

using Configuration = std::variant<PendantVertex, TriangleApex, ChainPair, Hinge>;

// Scans a connected graph for the first configuration, probing shapes in the
// order PendantVertex, TriangleApex, ChainPair, Hinge and picking the
// smallest qualifying u within each shape, so the result is deterministic.
// nullopt means the graph is not outerplanar (or has < 2 vertices).
// Disconnected input breaks the contract and throws invalid_argument.
std::optional<Configuration> find_configuration(const Graph& g);

// Cheap rejection filter: false ("fail") exactly when the graph is connected
// with >= 2 vertices yet has more than 2n-3 edges, which no outerplanar
// graph can.  true ("pass") promises nothing; the reduction itself is the
// backstop for sparse non-outerplanar inputs.
bool outerplanar_screen(const Graph& g);

}  // namespace outercolor

#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace outercolor {

// Simple undirected graph on nonnegative integer vertex ids, stored in
// compressed adjacency form with neighbor lists sorted ascending.  Values are
// immutable once built: removal produces a new graph, and removing a vertex
// leaves a hole in the id space rather than renumbering the others.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list.  Duplicate edges collapse; a
    // self-loop raises MalformedInputError, as does a negative id.  The
    // optional vertex list forces ids to exist even when no edge covers
    // them, which is the only way to get isolated vertices.
    static Graph from_edges(std::span<const std::pair<int, int>> edges,
                            std::span<const int> vertices = {});
    static Graph from_edges(std::initializer_list<std::pair<int, int>> edges,
                            std::span<const int> vertices = {});

    bool has_vertex(int v) const noexcept;
    bool has_edge(int u, int v) const noexcept;

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return edge_count_; }

    // One past the largest present id; 0 for the empty graph.
    int id_bound() const noexcept { return static_cast<int>(present_.size()); }

    int degree(int v) const;                     // throws std::out_of_range
    int max_degree() const noexcept;             // 0 when there are no edges
    std::span<const int> neighbors(int v) const; // ascending; throws std::out_of_range
    std::vector<int> vertices() const;           // ascending

    // Copy of the graph with u and its incident edges removed; the receiver
    // is untouched.  Unknown u throws std::out_of_range.
    Graph without_vertex(int u) const;

    // Same vertex set and same edge set.
    bool operator==(const Graph& other) const noexcept;

private:
    std::vector<char> present_;
    std::vector<int> offsets_;  // size id_bound()+1 once built
    std::vector<int> nbrs_;
    int vertex_count_ = 0;
    int edge_count_ = 0;

    static Graph assemble(std::vector<char> present,
                          const std::vector<std::pair<int, int>>& edges);
    friend Graph induced_subgraph(const Graph&, std::span<const int>);
};

// Subgraph induced by the given vertices (ids must exist; duplicates are
// fine).  Keeps original ids.
Graph induced_subgraph(const Graph& g, std::span<const int> keep);

// Connected components as disjoint vertex blocks.  Each block is sorted
// ascending and blocks are ordered by their smallest member.
struct ComponentPartition {
    std::vector<std::vector<int>> blocks;
};

ComponentPartition connected_components(const Graph& g);

// True when the graph has at most one connected component.
bool is_connected(const Graph& g);

// Vertices whose removal increases the number of connected components,
// ascending.  Computed with a single depth-first lowpoint pass.
std::vector<int> cut_vertices(const Graph& g);

}  // namespace outercolor

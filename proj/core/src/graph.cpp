#include "outercolor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "outercolor/errors.hpp"

namespace outercolor {

namespace {

void require_vertex(const Graph& g, int v, const char* what) {
    if (!g.has_vertex(v))
        throw std::out_of_range(std::string(what) + ": no vertex " + std::to_string(v));
}

}  // namespace

Graph Graph::assemble(std::vector<char> present,
                      const std::vector<std::pair<int, int>>& edges) {
    // `edges` must already be deduplicated, self-loop free, and covered by
    // `present`; both orientations are laid out and then sorted per vertex.
    Graph g;
    g.present_ = std::move(present);
    while (!g.present_.empty() && !g.present_.back()) g.present_.pop_back();
    const int bound = static_cast<int>(g.present_.size());
    for (char p : g.present_)
        if (p) ++g.vertex_count_;
    g.edge_count_ = static_cast<int>(edges.size());

    std::vector<int> deg(bound, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(bound + 1, 0);
    for (int v = 0; v < bound; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.nbrs_.resize(g.offsets_[bound]);
    std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.nbrs_[fill[u]++] = v;
        g.nbrs_[fill[v]++] = u;
    }
    for (int v = 0; v < bound; ++v)
        std::sort(g.nbrs_.begin() + g.offsets_[v], g.nbrs_.begin() + g.offsets_[v + 1]);
    return g;
}

Graph Graph::from_edges(std::span<const std::pair<int, int>> edges,
                        std::span<const int> vertices) {
    int bound = 0;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0)
            throw MalformedInputError("negative vertex id in edge list");
        if (u == v)
            throw MalformedInputError("self-loop at vertex " + std::to_string(u));
        bound = std::max({bound, u + 1, v + 1});
    }
    for (int v : vertices) {
        if (v < 0)
            throw MalformedInputError("negative vertex id");
        bound = std::max(bound, v + 1);
    }

    std::vector<char> present(bound, 0);
    for (auto [u, v] : edges) present[u] = present[v] = 1;
    for (int v : vertices) present[v] = 1;

    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) norm.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    return assemble(std::move(present), norm);
}

Graph Graph::from_edges(std::initializer_list<std::pair<int, int>> edges,
                        std::span<const int> vertices) {
    return from_edges(std::span<const std::pair<int, int>>(edges.begin(), edges.size()),
                      vertices);
}

bool Graph::has_vertex(int v) const noexcept {
    return v >= 0 && v < id_bound() && present_[v];
}

bool Graph::has_edge(int u, int v) const noexcept {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::degree(int v) const {
    require_vertex(*this, v, "degree");
    return offsets_[v + 1] - offsets_[v];
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (int v = 0; v < id_bound(); ++v)
        if (present_[v]) best = std::max(best, offsets_[v + 1] - offsets_[v]);
    return best;
}

std::span<const int> Graph::neighbors(int v) const {
    require_vertex(*this, v, "neighbors");
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
}

std::vector<int> Graph::vertices() const {
    std::vector<int> out;
    out.reserve(vertex_count_);
    for (int v = 0; v < id_bound(); ++v)
        if (present_[v]) out.push_back(v);
    return out;
}

Graph Graph::without_vertex(int u) const {
    require_vertex(*this, u, "without_vertex");
    std::vector<char> present = present_;
    present[u] = 0;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count_);
    for (int v = 0; v < id_bound(); ++v) {
        if (!present[v]) continue;
        for (int w : neighbors(v))
            if (w > v && w != u) edges.emplace_back(v, w);
    }
    return assemble(std::move(present), edges);
}

bool Graph::operator==(const Graph& other) const noexcept {
    if (vertex_count_ != other.vertex_count_ || edge_count_ != other.edge_count_)
        return false;
    if (id_bound() != other.id_bound()) return false;
    if (present_ != other.present_) return false;
    for (int v = 0; v < id_bound(); ++v) {
        if (!present_[v]) continue;
        auto a = neighbors(v);
        auto b = other.neighbors(v);
        if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) return false;
    }
    return true;
}

Graph induced_subgraph(const Graph& g, std::span<const int> keep) {
    std::vector<char> present(g.id_bound(), 0);
    for (int v : keep) {
        require_vertex(g, v, "induced_subgraph");
        present[v] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.id_bound(); ++v) {
        if (!present[v]) continue;
        for (int w : g.neighbors(v))
            if (w > v && present[w]) edges.emplace_back(v, w);
    }
    return Graph::assemble(std::move(present), edges);
}

ComponentPartition connected_components(const Graph& g) {
    ComponentPartition parts;
    std::vector<char> seen(g.id_bound(), 0);
    std::vector<int> queue;
    for (int s = 0; s < g.id_bound(); ++s) {
        if (!g.has_vertex(s) || seen[s]) continue;
        queue.assign(1, s);
        seen[s] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int w : g.neighbors(queue[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        std::sort(queue.begin(), queue.end());
        parts.blocks.push_back(queue);
    }
    return parts;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    int start = 0;
    while (!g.has_vertex(start)) ++start;
    std::vector<char> seen(g.id_bound(), 0);
    std::vector<int> queue{start};
    seen[start] = 1;
    int reached = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int w : g.neighbors(queue[i]))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    return reached == g.vertex_count();
}

std::vector<int> cut_vertices(const Graph& g) {
    // Iterative lowpoint computation: articulation at a non-root when some
    // child subtree cannot reach above it, at a root with two or more
    // depth-first children.
    const int bound = g.id_bound();
    std::vector<int> num(bound, -1), low(bound, 0), parent(bound, -1);
    std::vector<char> is_cut(bound, 0);
    std::vector<std::pair<int, std::size_t>> stack;  // vertex, next neighbor index
    int counter = 0;

    for (int root = 0; root < bound; ++root) {
        if (!g.has_vertex(root) || num[root] >= 0) continue;
        int root_children = 0;
        num[root] = low[root] = counter++;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            auto nb = g.neighbors(v);
            if (idx < nb.size()) {
                int w = nb[idx++];
                if (num[w] < 0) {
                    parent[w] = v;
                    if (v == root) ++root_children;
                    num[w] = low[w] = counter++;
                    stack.emplace_back(w, 0);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= num[p]) is_cut[p] = 1;
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }

    std::vector<int> out;
    for (int v = 0; v < bound; ++v)
        if (is_cut[v]) out.push_back(v);
    return out;
}

}  // namespace outercolor

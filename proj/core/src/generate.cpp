#include "outercolor/generate.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "outercolor/errors.hpp"

namespace outercolor {

namespace {

// mt19937_64 is fully pinned by the standard; the derived draws below are
// hand-rolled (rejection sampling, explicit shuffle) because the library
// distributions are not, and generated instances must be reproducible
// everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
        std::uint64_t x = eng_();
        while (x < reject) x = eng_();
        return x % bound;
    }

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

// Uniform ballot sequence: shuffle c+1 rises and c falls, rotate to just
// past the last prefix-sum minimum (the unique rotation that stays
// positive), drop the leading rise.  Each of the Catalan(c) balanced words
// comes out equally often.
std::vector<char> random_balanced_word(int c, Rng& rng) {
    std::vector<char> seq(2 * static_cast<std::size_t>(c) + 1, 0);
    std::fill(seq.begin(), seq.begin() + c + 1, 1);
    rng.shuffle(seq);

    int sum = 0, best = 1;
    std::size_t cut = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        sum += seq[i] ? 1 : -1;
        if (sum <= best) {
            best = sum;
            cut = i + 1;
        }
    }
    std::vector<char> word;
    word.reserve(2 * static_cast<std::size_t>(c));
    for (std::size_t i = 1; i < seq.size(); ++i)
        word.push_back(seq[(cut + i) % seq.size()]);
    return word;
}

// Balanced word -> triangulation chords of the polygon 0..n-1.  A segment
// (lo,hi) reading the subword at `start` puts its triangle apex at
// m = lo + 1 + (half the length of the first balanced prefix); sides that
// span two or more hull steps become chords and recurse.
std::vector<std::pair<int, int>> word_to_chords(int n, const std::vector<char>& word) {
    std::vector<std::size_t> match(word.size(), 0);
    std::vector<std::size_t> opens;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i]) {
            opens.push_back(i);
        } else {
            match[opens.back()] = i;
            opens.pop_back();
        }
    }

    std::vector<std::pair<int, int>> chords;
    struct Segment {
        int lo, hi;
        std::size_t start;
    };
    std::vector<Segment> stack{{0, n - 1, 0}};
    while (!stack.empty()) {
        auto [lo, hi, start] = stack.back();
        stack.pop_back();
        const std::size_t mid = match[start];
        const int m = lo + 1 + static_cast<int>((mid - start - 1) / 2);
        if (m - lo >= 2) {
            chords.push_back({lo, m});
            stack.push_back({lo, m, start + 1});
        }
        if (hi - m >= 2) {
            chords.push_back({m, hi});
            stack.push_back({m, hi, mid + 1});
        }
    }
    return chords;
}

std::vector<std::pair<int, int>> hull_edges(int n) {
    std::vector<std::pair<int, int>> hull;
    hull.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) hull.push_back({i, i + 1});
    hull.push_back({0, n - 1});
    return hull;
}

void require_polygon(int n) {
    if (n < 3) throw MalformedInputError("polygon generation needs at least 3 vertices");
}

}  // namespace

Graph gen_maximal_outerplanar(int n, std::uint64_t seed) {
    require_polygon(n);
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges = hull_edges(n);
    for (auto chord : word_to_chords(n, random_balanced_word(n - 2, rng)))
        edges.push_back(chord);
    return Graph::from_edges(edges);
}

Graph gen_outerplanar(const GeneratorParams& params) {
    require_polygon(params.n);
    for (double p : {params.chord_keep_probability, params.hull_delete_probability})
        if (!(p >= 0.0 && p <= 1.0))
            throw MalformedInputError("probabilities must lie in [0,1]");

    Rng rng(params.seed);
    std::vector<std::pair<int, int>> chords =
        word_to_chords(params.n, random_balanced_word(params.n - 2, rng));
    std::sort(chords.begin(), chords.end());

    std::vector<std::pair<int, int>> edges = hull_edges(params.n);
    for (auto chord : chords)
        if (rng.unit() < params.chord_keep_probability) edges.push_back(chord);

    // The candidate graph must keep all n vertices: rebuilding from the edge
    // list alone would let a deletion silently drop an isolated endpoint and
    // the connectivity guard would never notice.
    std::vector<int> all(params.n);
    for (int v = 0; v < params.n; ++v) all[v] = v;

    std::vector<std::pair<int, int>> hull = hull_edges(params.n);
    std::sort(hull.begin(), hull.end());
    for (auto edge : hull) {
        if (!(rng.unit() < params.hull_delete_probability)) continue;
        std::vector<std::pair<int, int>> trimmed;
        trimmed.reserve(edges.size() - 1);
        for (auto e : edges)
            if (e != edge) trimmed.push_back(e);
        if (is_connected(Graph::from_edges(trimmed, all))) edges = std::move(trimmed);
    }
    return Graph::from_edges(edges, all);
}

Graph family(const std::string& name, int n) {
    std::vector<std::pair<int, int>> edges;
    if (name == "path") {
        if (n < 1) throw MalformedInputError("path needs at least 1 vertex");
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
        const std::vector<int> verts{0};
        return n == 1 ? Graph::from_edges(edges, verts) : Graph::from_edges(edges);
    }
    if (name == "cycle") {
        if (n < 3) throw MalformedInputError("cycle needs at least 3 vertices");
        return Graph::from_edges(hull_edges(n));
    }
    if (name == "star") {
        if (n < 2) throw MalformedInputError("star needs at least 2 vertices");
        for (int i = 1; i < n; ++i) edges.push_back({0, i});
        return Graph::from_edges(edges);
    }
    if (name == "fan") {
        if (n < 3) throw MalformedInputError("fan needs at least 3 vertices");
        for (int i = 0; i + 2 < n; ++i) edges.push_back({i, i + 1});
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, n - 1});
        return Graph::from_edges(edges);
    }
    if (name == "complete4") {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
        return Graph::from_edges(edges);
    }
    if (name == "k23") {
        for (int i = 0; i < 2; ++i)
            for (int j = 2; j < 5; ++j) edges.push_back({i, j});
        return Graph::from_edges(edges);
    }
    throw MalformedInputError("unknown family '" + name + "'");
}

}  // namespace outercolor

#include "outercolor/io.hpp"

#include <charconv>
#include <sstream>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "outercolor/errors.hpp"

namespace outercolor {

namespace {

int parse_id(const std::string& token, std::size_t line_no) {
    int value = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 0)
        throw MalformedInputError("line " + std::to_string(line_no) + ": bad vertex id '" +
                                  token + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> declared;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a) || a.front() == '#') continue;
        if (!(fields >> b) || fields >> extra)
            throw MalformedInputError("line " + std::to_string(line_no) +
                                      ": expected two fields");
        if (a == "v") {
            const int n = parse_id(b, line_no);
            for (int v = 0; v < n; ++v) declared.push_back(v);
            continue;
        }
        const int u = parse_id(a, line_no);
        const int v = parse_id(b, line_no);
        if (u == v)
            throw MalformedInputError("line " + std::to_string(line_no) + ": self-loop at " +
                                      std::to_string(u));
        edges.push_back({u, v});
    }
    return Graph::from_edges(edges, declared);
}

std::string emit_edge_list(const Graph& g) {
    std::string out;
    bool isolated = false;
    for (int v : g.vertices())
        if (g.degree(v) == 0) isolated = true;
    if (isolated) out += "v " + std::to_string(g.id_bound()) + "\n";
    for (int v : g.vertices())
        for (int w : g.neighbors(v))
            if (v < w) out += std::to_string(v) + " " + std::to_string(w) + "\n";
    return out;
}

std::string emit_coloring(const Graph& g, const IncidenceColoring& c,
                          std::optional<std::uint64_t> seed) {
    nlohmann::ordered_json doc;
    doc["k"] = c.palette_size();
    doc["l"] = c.incoming_bound();
    doc["colors"] = nlohmann::ordered_json::array();
    for (const auto& [inc, col] : c.assignment())
        doc["colors"].push_back({{"tail", inc.tail}, {"head", inc.head}, {"color", col}});
    doc["meta"] = {{"delta", g.max_degree()}};
    if (seed) doc["meta"]["seed"] = *seed;
    return doc.dump(2) + "\n";
}

IncidenceColoring parse_coloring(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("coloring is not valid JSON: ") + e.what());
    }
    try {
        IncidenceColoring c(doc.at("k").get<int>(), doc.at("l").get<int>());
        for (const auto& entry : doc.at("colors")) {
            c.assign({entry.at("tail").get<int>(), entry.at("head").get<int>()},
                     entry.at("color").get<int>());
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("coloring document malformed: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw MalformedInputError(std::string("coloring document malformed: ") + e.what());
    }
}

namespace {

std::string incidence_str(const Incidence& inc) {
    return "(" + std::to_string(inc.tail) + "," + std::to_string(inc.head) + ")";
}

}  // namespace

std::string describe_violation(const Violation& violation) {
    return std::visit(
        [](const auto& v) -> std::string {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, ForeignIncidence>)
                return "foreign incidence " + incidence_str(v.incidence) +
                       ": not an incidence of the graph";
            else if constexpr (std::is_same_v<V, PaletteOverflow>)
                return "palette overflow: incidence " + incidence_str(v.incidence) +
                       " has color " + std::to_string(v.color);
            else if constexpr (std::is_same_v<V, AdjacencyConflict>)
                return "adjacency conflict: " + incidence_str(v.first) + " and " +
                       incidence_str(v.second) + " share a color";
            else if constexpr (std::is_same_v<V, IncomingOverflow>) {
                std::string colors;
                for (int c : v.colors) colors += (colors.empty() ? "" : ",") + std::to_string(c);
                return "incoming overflow at vertex " + std::to_string(v.vertex) + ": colors {" +
                       colors + "}";
            } else
                return "uncolored incidence " + incidence_str(v.incidence);
        },
        violation);
}

}  // namespace outercolor

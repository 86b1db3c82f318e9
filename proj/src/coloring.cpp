#include "oddcover/coloring.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace oddcover {

EdgeColoring parse_coloring_json(const DartGraph& g, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("coloring json: ") + e.what());
    }
    if (!j.contains("palette") || !j.contains("colors"))
        throw std::invalid_argument("coloring json: missing palette/colors");
    EdgeColoring c;
    c.palette = j["palette"].get<int>();
    if (c.palette < 1) throw std::invalid_argument("coloring json: palette must be positive");
    c.colors.assign(g.num_edges(), 0);
    for (const auto& [key, val] : j["colors"].items()) {
        int e = g.edge_index(key);
        int col = val.get<int>();
        if (col < 1 || col > c.palette)
            throw std::invalid_argument("coloring json: color out of palette for edge " + key);
        c.colors[e] = col;
    }
    for (int e = 0; e < g.num_edges(); ++e)
        if (c.colors[e] == 0)
            throw std::invalid_argument("coloring json: edge " + g.edge_ids[e] + " uncolored");
    return c;
}

std::string write_coloring_json(const DartGraph& g, const EdgeColoring& c) {
    nlohmann::json j;
    j["palette"] = c.palette;
    j["colors"] = nlohmann::json::object();
    for (int e = 0; e < g.num_edges(); ++e) j["colors"][g.edge_ids[e]] = c.colors[e];
    return j.dump();
}

std::string write_dot(const DartGraph& g, const EdgeColoring* coloring) {
    static const char* kPalette[] = {"red",    "blue",   "green",  "orange", "purple",
                                     "brown",  "cyan",   "magenta", "gold",  "gray",
                                     "pink",   "olive"};
    constexpr int kPaletteSize = 12;
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& v : g.vertex_ids) out << "  \"" << v << "\";\n";
    for (int e = 0; e < g.num_edges(); ++e) {
        out << "  \"" << g.vertex_ids[g.ends[e].first] << "\" -- \""
            << g.vertex_ids[g.ends[e].second] << "\"";
        if (coloring) {
            int c = coloring->colors[e];
            out << " [color=" << kPalette[(c - 1) % kPaletteSize] << ", label=\"" << c << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace oddcover

#pragma once

#include <string>
#include <vector>

#include "oddcover/graph.hpp"

namespace oddcover {

// Total edge coloring with colors in 1..palette.
struct EdgeColoring {
    int palette = 0;
    std::vector<int> colors;  // indexed by edge

    bool operator==(const EdgeColoring&) const = default;
};

EdgeColoring parse_coloring_json(const DartGraph& g, const std::string& text);
std::string write_coloring_json(const DartGraph& g, const EdgeColoring& c);

std::string write_dot(const DartGraph& g, const EdgeColoring* coloring = nullptr);

}  // namespace oddcover

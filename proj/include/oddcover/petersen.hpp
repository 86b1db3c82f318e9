#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"
#include "oddcover/strong.hpp"

namespace oddcover {

// Map E(G) -> E(P) for cubic G, P the Petersen graph (odd_graph(3)); adjacent
// edges must land on adjacent edges.
struct PetersenColoring {
    std::vector<int> edge_map;  // indexed by edge of the source graph
};

bool is_petersen_coloring(const DartGraph& g, const PetersenColoring& xi);

// The induced vertex map (vertex to the common vertex of its three image
// edges) sends adjacent vertices to adjacent vertices.
bool is_homomorphism(const DartGraph& g, const PetersenColoring& xi);

// Rich edges go to the edge joining the two complementary pairs; a poor edge
// e = uv with matching pairs A goes to the edge A - D, D the leftover pair.
PetersenColoring normal_to_petersen(const DartGraph& g, const EdgeColoring& phi);

PetersenColoring petersen_from_cover(const CoveringMap& f);

// Color each edge by the canonical color of its image; requires a
// homomorphic Petersen coloring, output is strong with palette 5.
EdgeColoring strong5_from_petersen_hom(const DartGraph& g, const PetersenColoring& xi);

// When the Petersen coloring is a homomorphism, the induced cover.
CoveringMap cover_from_petersen_hom(const DartGraph& g, const PetersenColoring& xi);

struct EquivalenceReport {
    bool conclusive = false;
    bool chi_strong_is_5 = false;
    bool covers_petersen = false;
    bool normal_all_rich = false;
    bool petersen_homomorphism = false;
    std::optional<EdgeColoring> strong_witness;
    std::optional<CoveringMap> cover_witness;
    std::optional<PetersenColoring> petersen_witness;
};

// Four-way equivalence for cubic graphs, decided through the exact solver.
EquivalenceReport equivalence_report(const DartGraph& g, const SearchBudget& budget = {});

PetersenColoring parse_petersen_coloring_json(const DartGraph& g, const DartGraph& petersen,
                                              const std::string& text);
std::string write_petersen_coloring_json(const DartGraph& g, const DartGraph& petersen,
                                         const PetersenColoring& xi);

}  // namespace oddcover

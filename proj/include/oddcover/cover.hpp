#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddcover/coloring.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

// Vertex + dart map claimed to be a covering projection source -> target.
struct CoveringMap {
    DartGraph source;
    DartGraph target;
    std::vector<int> vertex_map;  // indexed by source vertex
    std::vector<int> dart_map;    // indexed by source dart
};

struct CoverCheck {
    bool ok = false;
    std::string reason;  // first violated condition when !ok
};

CoverCheck verify_cover(const CoveringMap& f);

// Common fiber size; requires verify_cover(f).ok and a connected target.
int fold_count(const CoveringMap& f);

// Theorem-style construction: vertex v goes to its derived-coloring set, darts
// follow matching edge colors against the canonical coloring of odd_graph(k).
CoveringMap cover_from_strong_coloring(const DartGraph& g, const EdgeColoring& sigma, int k);

// Automorphism alpha of g with tau = sigma ∘ alpha (on edges), if any.
std::optional<std::vector<int>> colorings_equivalent(const DartGraph& g, const EdgeColoring& sigma,
                                                     const EdgeColoring& tau);

// Isomorphism xi: source(f2) -> source(f1) with f2 = f1 ∘ xi, if any. Decided
// through voltage reductions; the witness comes from fiber propagation.
std::optional<std::vector<int>> covers_equivalent_direct(const CoveringMap& f1,
                                                         const CoveringMap& f2);

// Exhaustive fiber-respecting search used to cross-check the voltage route.
std::optional<std::vector<int>> fiber_respecting_isomorphism(const CoveringMap& f1,
                                                             const CoveringMap& f2);

CoveringMap parse_cover_json(const std::string& text);
std::string write_cover_json(const CoveringMap& f);

}  // namespace oddcover

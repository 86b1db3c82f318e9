#pragma once

#include <string>
#include <vector>

#include "oddcover/coloring.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

// Sorted n-subset of {1..m}; vertex label of K(m,n) and the color-set type of
// derived vertex colorings.
struct KneserVertex {
    int m = 0;
    std::vector<int> subset;  // strictly increasing

    bool operator==(const KneserVertex&) const = default;
    std::string id() const;  // "1-2-4"
};

KneserVertex parse_kneser_vertex(const std::string& id, int m);

// K(m,n): vertices are n-subsets of {1..m} in lex order, adjacency is
// disjointness. n = 1 is allowed as a testing convenience (yields K_m).
DartGraph kneser_graph(int m, int n);
DartGraph odd_graph(int k);  // K(2k-1, k-1), k >= 3

// Edge uv of the odd graph gets the unique ground-set element missing from
// u ∪ v; uses exactly 2k-1 colors and is strong.
EdgeColoring canonical_coloring(int k);

struct DerivedVertexColoring {
    int k = 0;
    std::vector<KneserVertex> assignment;  // indexed by vertex of the source graph
};

// assignment(v) = {1..2k-1} minus the edge colors at v.
DerivedVertexColoring derived_vertex_coloring(const DartGraph& g, const EdgeColoring& sigma, int k);

// Edge uv gets the unique element of {1..2k-1} outside sigma'(u) ∪ sigma'(v).
EdgeColoring reconstruct_coloring(const DartGraph& g, const DerivedVertexColoring& dvc);

}  // namespace oddcover

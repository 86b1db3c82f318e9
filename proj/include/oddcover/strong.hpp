#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddcover/coloring.hpp"
#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

enum class ProofState { optimal, upper_bound_only, timeout };

struct SolveResult {
    int chi_strong = 0;
    EdgeColoring witness;
    ProofState proof_state = ProofState::timeout;
    std::uint64_t nodes_explored = 0;
    int lower_bound = 0;  // best proven bound when timed out
};

struct SearchBudget {
    std::uint64_t max_nodes = UINT64_MAX;
    double max_seconds = 1e18;
};

// Strong = proper with no bichromatic path of length three; equivalently every
// color class is an induced matching. Both characterizations are implemented.
bool is_strong(const DartGraph& g, const EdgeColoring& phi);
bool is_strong_via_induced_matchings(const DartGraph& g, const EdgeColoring& phi);
bool is_proper(const DartGraph& g, const EdgeColoring& phi);

enum class EdgeClass { rich, poor, neither };
EdgeClass edge_class(const DartGraph& g, const EdgeColoring& phi, int e);

// Cubic graphs, palette 5: every edge rich or poor.
bool is_normal(const DartGraph& g, const EdgeColoring& phi);

// Exact strong chromatic index via vertex coloring of the square of the line
// graph: branch and bound, clique lower bound, one max clique pre-colored.
SolveResult chi_strong(const DartGraph& g, std::optional<int> lower_hint = {},
                       std::optional<int> upper_hint = {}, const SearchBudget& budget = {});

struct DecisionResult {
    bool decided = false;  // false: budget exhausted
    bool exists = false;
    EdgeColoring witness;
    std::uint64_t nodes_explored = 0;
};

DecisionResult has_strong_coloring(const DartGraph& g, int t, const SearchBudget& budget = {});

// All total strong colorings with colors in {1..t}, as functions, in
// lexicographic edge-by-edge order. Throws when cap is exceeded.
std::vector<EdgeColoring> enumerate_strong(const DartGraph& g, int t, std::uint64_t cap);

// Pullback of a strong coloring through a verified covering projection.
EdgeColoring lift_coloring(const CoveringMap& f, const EdgeColoring& phi);

// Edges conflict iff adjacent or joined by an edge; exposed for tests.
std::vector<std::vector<int>> strong_conflict_graph(const DartGraph& g);

}  // namespace oddcover

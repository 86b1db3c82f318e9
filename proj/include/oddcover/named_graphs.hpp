#pragma once

#include <vector>

#include "oddcover/graph.hpp"

namespace oddcover {

// Hamiltonian cycle 0..n-1 plus chord i -> i + shifts[i % shifts.size()].
DartGraph lcf_graph(int n, const std::vector<int>& shifts);

DartGraph cycle_graph(int n);
DartGraph complete_graph(int n);
DartGraph complete_bipartite(int a, int b);
DartGraph path_graph(int n);

DartGraph theta_graph();     // two vertices, three parallel edges
DartGraph dumbbell_graph();  // bridge plus a loop at each end
DartGraph cube_graph();      // Q_3
DartGraph heawood_graph();
DartGraph tutte_coxeter_graph();  // the 8-cage
DartGraph wagner_graph();
DartGraph k33_subdivided();  // K_{3,3} with one edge subdivided

}  // namespace oddcover

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

// Permutation of {1..d} acting on the right: (i)p = img[i-1]+1. Stored 0-based.
struct Perm {
    std::vector<int> img;

    static Perm identity(int d);
    int degree() const { return static_cast<int>(img.size()); }
    int apply(int i) const { return img[i]; }  // 0-based
    bool is_identity() const;
    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return img < o.img; }
};

Perm perm_compose(const Perm& p, const Perm& q);  // (i)(p*q) = ((i)p)q
Perm perm_inverse(const Perm& p);
std::vector<int> cycle_type(const Perm& p);  // sorted ascending, fixed points included
bool is_involution(const Perm& p);
Perm perm_from_images(const std::vector<int>& one_based);  // validates
std::vector<int> perm_to_images(const Perm& p);            // 1-based

// Dart -> S_d with voltages(inv x) = voltages(x)^-1.
struct VoltageAssignment {
    DartGraph base;
    int d = 1;
    std::vector<Perm> voltages;  // indexed by dart

    void set_edge_voltage(int e, const Perm& p);  // sets both darts
};

VoltageAssignment trivial_assignment(const DartGraph& base, int d);

struct DerivedGraph {
    DartGraph lift;
    CoveringMap projection;  // the natural projection onto the base
};

// Vertex (u,i) joined to (v,(i)kappa_x) along each base dart x = uv.
DerivedGraph derived_lift(const VoltageAssignment& kappa);

// Tree darts become trivial; each cotree dart gets the walk product over
// T(u) z T(v)^-1 in walk order.
VoltageAssignment t_reduction(const VoltageAssignment& kappa, const SpanningTree& tree, int root);

bool is_transitive(const std::vector<Perm>& generators, int d);
bool lift_connected(const VoltageAssignment& kappa);

// Gross–Tucker reconstruction: a voltage assignment on the target of f whose
// natural projection is equivalent to f. Fibers are labeled by lifting the
// tree from the basepoint fiber in source input order.
VoltageAssignment voltage_from_cover(const CoveringMap& f, const SpanningTree& tree);

// Conjugator g with lambda'(x) = g * kappa'(x) * g^-1 on all cotree darts,
// searched over all of S_d with cycle-type pre-filtering. Exact for d <= 8.
std::optional<Perm> covers_equivalent_voltage(const VoltageAssignment& kappa,
                                              const VoltageAssignment& lambda,
                                              const SpanningTree& tree, int root);

struct NonequivPair {
    bool found = false;
    std::string status;  // "found" / "exhausted" / "budget"
    VoltageAssignment kappa, lambda;
    std::vector<int> lift_isomorphism;  // V(lift(lambda)) -> V(lift(kappa))
};

// Reconstructs a witness in the spirit of the 40-vertex example: two voltage
// assignments on the Petersen graph in S_d with connected isomorphic lifts
// whose natural projections are not equivalent.
NonequivPair find_nonequivalent_pair(int d = 4, double budget_seconds = 1800.0);

// Z_2^beta voltages on edges (self-inverse); beta capped at 12.
struct BinaryVoltage {
    DartGraph base;
    int beta = 0;
    std::vector<std::uint32_t> edge_bits;  // indexed by edge
};

// The i-th cotree edge (input order) carries the i-th standard basis vector.
BinaryVoltage homology_voltage(const DartGraph& h, const SpanningTree& tree);

// Regular action of Z_2^beta on itself, reusing the permutation lift engine.
VoltageAssignment binary_to_permutation(const BinaryVoltage& bv);

// 2^beta-fold homology lift; certified connected with girth exactly doubled.
DerivedGraph girth_double(const DartGraph& h);

struct CounterexampleGraph {
    DartGraph graph;
    int girth_value = 0;
    bool bipartite = false;
    bool connected = false;
};

// G_1 = theta graph, G_{n+1} = girth_double(G_n); 1 <= n <= 3.
CounterexampleGraph counterexample_family(int n);

VoltageAssignment parse_voltage_json(const DartGraph& base, const std::string& text);
std::string write_voltage_json(const VoltageAssignment& v);
BinaryVoltage parse_binary_voltage_json(const DartGraph& base, const std::string& text);
std::string write_binary_voltage_json(const BinaryVoltage& v);

}  // namespace oddcover

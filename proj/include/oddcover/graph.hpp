#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oddcover {

// Multigraph stored as darts. Edge e owns darts 2e ("e+", tail ends[e].first)
// and 2e+1 ("e-", tail ends[e].second); inv flips the low bit. Loops keep two
// darts with the same head. Immutable after build_graph.
struct DartGraph {
    std::vector<std::string> vertex_ids;
    std::vector<std::string> edge_ids;
    std::vector<std::pair<int, int>> ends;  // (tail of '+', head of '+')
    std::vector<std::vector<int>> out;      // darts with tail v, input order

    int num_vertices() const { return static_cast<int>(vertex_ids.size()); }
    int num_edges() const { return static_cast<int>(edge_ids.size()); }
    int num_darts() const { return 2 * num_edges(); }

    static int inv(int d) { return d ^ 1; }
    static int edge_of(int d) { return d >> 1; }

    int tail(int d) const { return (d & 1) ? ends[d >> 1].second : ends[d >> 1].first; }
    int head(int d) const { return (d & 1) ? ends[d >> 1].first : ends[d >> 1].second; }
    int degree(int v) const { return static_cast<int>(out[v].size()); }

    bool is_loop(int e) const { return ends[e].first == ends[e].second; }
    bool has_loop() const;
    bool is_simple() const;  // no loops, no parallel edges
    bool is_regular(int k) const;

    int vertex_index(const std::string& id) const;           // throws on miss
    std::optional<int> find_vertex(const std::string& id) const;
    int edge_index(const std::string& id) const;
    std::string dart_id(int d) const;                        // "e1+" / "e1-"
    int dart_index(const std::string& id) const;

    // Structural equality on the labeled graph.
    bool same_graph(const DartGraph& other) const;
};

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

DartGraph build_graph(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges);
DartGraph build_graph(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges,
                      const std::vector<std::string>& edge_ids);

int girth(const DartGraph& g);
bool is_bipartite(const DartGraph& g);
bool is_connected(const DartGraph& g);
int betti(const DartGraph& g);

struct SpanningTree {
    int root = 0;
    std::vector<char> tree_edge;     // indexed by edge
    std::vector<int> parent_dart;    // dart parent->v; -1 at root
    std::vector<int> parent_vertex;  // -1 at root
    std::vector<int> bfs_order;

    // Darts of the unique tree path root -> v, in walk order.
    std::vector<int> path_from_root(int v) const;
};

SpanningTree spanning_tree(const DartGraph& g, int root);

// Multigraph-aware isomorphism (adjacency with multiplicity, loops counted).
std::optional<std::vector<int>> is_isomorphic(const DartGraph& g, const DartGraph& h);
std::vector<std::vector<int>> automorphisms(const DartGraph& g);

DartGraph parse_graph6(const std::string& text);
std::string write_graph6(const DartGraph& g);

DartGraph parse_graph_json(const std::string& text);
std::string write_graph_json(const DartGraph& g);

}  // namespace oddcover

#pragma once

#include <random>
#include <string>
#include <vector>

#include "oddcover/graph.hpp"
#include "oddcover/voltage.hpp"

namespace oddcover::testutil {

// Random connected multigraph without loops; retries until connected.
inline DartGraph random_connected_graph(std::mt19937& rng, int max_vertices = 8,
                                        bool allow_parallel = true) {
    for (;;) {
        std::uniform_int_distribution<int> nv(2, max_vertices);
        int n = nv(rng);
        std::vector<std::string> verts;
        for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> edges;
        // random spanning tree first, then extra edges
        for (int i = 1; i < n; ++i) {
            std::uniform_int_distribution<int> pick(0, i - 1);
            edges.emplace_back(verts[pick(rng)], verts[i]);
        }
        std::uniform_int_distribution<int> extra(0, n);
        int more = extra(rng);
        for (int i = 0; i < more; ++i) {
            std::uniform_int_distribution<int> pick(0, n - 1);
            int a = pick(rng), b = pick(rng);
            if (a == b) continue;
            if (!allow_parallel) {
                bool dup = false;
                for (auto& [x, y] : edges)
                    if ((x == verts[a] && y == verts[b]) || (x == verts[b] && y == verts[a])) dup = true;
                if (dup) continue;
            }
            edges.emplace_back(verts[a], verts[b]);
        }
        DartGraph g = build_graph(verts, edges);
        if (is_connected(g)) return g;
    }
}

inline Perm random_perm(std::mt19937& rng, int d) {
    std::vector<int> img(d);
    for (int i = 0; i < d; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    Perm p;
    p.img = img;
    return p;
}

inline VoltageAssignment random_assignment(std::mt19937& rng, const DartGraph& base, int d) {
    VoltageAssignment v = trivial_assignment(base, d);
    for (int e = 0; e < base.num_edges(); ++e) v.set_edge_voltage(e, random_perm(rng, d));
    return v;
}

}  // namespace oddcover::testutil

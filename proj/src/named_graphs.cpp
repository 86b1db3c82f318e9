#include "oddcover/named_graphs.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace oddcover {

DartGraph lcf_graph(int n, const std::vector<int>& shifts) {
    if (n < 3 || shifts.empty()) throw std::invalid_argument("lcf_graph: bad parameters");
    std::vector<std::string> verts;
    for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(verts[i], verts[(i + 1) % n]);
    std::set<std::pair<int, int>> chord_seen;
    for (int i = 0; i < n; ++i) {
        int j = ((i + shifts[i % shifts.size()]) % n + n) % n;
        auto p = std::minmax(i, j);
        if (chord_seen.insert({p.first, p.second}).second) edges.emplace_back(verts[i], verts[j]);
    }
    return build_graph(verts, edges);
}

DartGraph cycle_graph(int n) {
    std::vector<std::string> verts;
    for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(verts[i], verts[(i + 1) % n]);
    return build_graph(verts, edges);
}

DartGraph complete_graph(int n) {
    std::vector<std::string> verts;
    for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(verts[i], verts[j]);
    return build_graph(verts, edges);
}

DartGraph complete_bipartite(int a, int b) {
    std::vector<std::string> verts;
    for (int i = 0; i < a; ++i) verts.push_back("a" + std::to_string(i));
    for (int i = 0; i < b; ++i) verts.push_back("b" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(verts[i], verts[a + j]);
    return build_graph(verts, edges);
}

DartGraph path_graph(int n) {
    std::vector<std::string> verts;
    for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(verts[i], verts[i + 1]);
    return build_graph(verts, edges);
}

DartGraph theta_graph() {
    return build_graph({"u", "v"}, {{"u", "v"}, {"u", "v"}, {"u", "v"}});
}

DartGraph dumbbell_graph() {
    return build_graph({"u", "v"}, {{"u", "v"}, {"u", "u"}, {"v", "v"}});
}

DartGraph cube_graph() {
    std::vector<std::string> verts;
    for (int i = 0; i < 8; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < 8; ++i)
        for (int b = 0; b < 3; ++b) {
            int j = i ^ (1 << b);
            if (i < j) edges.emplace_back(verts[i], verts[j]);
        }
    return build_graph(verts, edges);
}

DartGraph heawood_graph() { return lcf_graph(14, {5, -5}); }

DartGraph tutte_coxeter_graph() { return lcf_graph(30, {-13, -9, 7, -7, 9, 13}); }

DartGraph wagner_graph() { return lcf_graph(8, {4}); }

DartGraph k33_subdivided() {
    DartGraph k = complete_bipartite(3, 3);
    std::vector<std::string> verts = k.vertex_ids;
    verts.push_back("s");
    std::vector<std::pair<std::string, std::string>> edges;
    // subdivide the first edge
    edges.emplace_back(k.vertex_ids[k.ends[0].first], "s");
    edges.emplace_back("s", k.vertex_ids[k.ends[0].second]);
    for (int e = 1; e < k.num_edges(); ++e)
        edges.emplace_back(k.vertex_ids[k.ends[e].first], k.vertex_ids[k.ends[e].second]);
    return build_graph(verts, edges);
}

}  // namespace oddcover

#include "oddcover/kneser.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oddcover {

std::string KneserVertex::id() const {
    std::ostringstream out;
    for (size_t i = 0; i < subset.size(); ++i) {
        if (i) out << "-";
        out << subset[i];
    }
    return out.str();
}

KneserVertex parse_kneser_vertex(const std::string& id, int m) {
    KneserVertex v;
    v.m = m;
    std::istringstream in(id);
    std::string part;
    while (std::getline(in, part, '-')) v.subset.push_back(std::stoi(part));
    for (size_t i = 0; i < v.subset.size(); ++i) {
        if (v.subset[i] < 1 || v.subset[i] > m)
            throw std::invalid_argument("kneser vertex element out of range: " + id);
        if (i > 0 && v.subset[i] <= v.subset[i - 1])
            throw std::invalid_argument("kneser vertex not strictly increasing: " + id);
    }
    return v;
}

static std::vector<std::vector<int>> combinations(int m, int n) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    // lexicographic
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == n) {
            all.push_back(cur);
            return;
        }
        for (int x = start; x <= m; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return all;
}

static bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

DartGraph kneser_graph(int m, int n) {
    if (n < 1) throw std::invalid_argument("kneser_graph: n must be at least 1");
    if (n >= 2 && m < 2 * n + 1)
        throw std::invalid_argument("kneser_graph: requires m >= 2n+1");
    if (n == 1 && m < 2) throw std::invalid_argument("kneser_graph: requires m >= 2 when n = 1");
    auto subsets = combinations(m, n);
    std::vector<std::string> verts;
    verts.reserve(subsets.size());
    for (const auto& s : subsets) {
        KneserVertex kv{m, s};
        verts.push_back(kv.id());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j)
            if (disjoint(subsets[i], subsets[j])) edges.emplace_back(verts[i], verts[j]);
    return build_graph(verts, edges);
}

DartGraph odd_graph(int k) {
    if (k < 3) throw std::invalid_argument("odd_graph: requires k >= 3");
    return kneser_graph(2 * k - 1, k - 1);
}

EdgeColoring canonical_coloring(int k) {
    if (k < 3) throw std::invalid_argument("canonical_coloring: requires k >= 3");
    DartGraph g = odd_graph(k);
    int m = 2 * k - 1;
    EdgeColoring c;
    c.palette = m;
    c.colors.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        auto u = parse_kneser_vertex(g.vertex_ids[g.ends[e].first], m);
        auto v = parse_kneser_vertex(g.vertex_ids[g.ends[e].second], m);
        std::set<int> seen(u.subset.begin(), u.subset.end());
        seen.insert(v.subset.begin(), v.subset.end());
        int missing = 0;
        for (int x = 1; x <= m; ++x)
            if (!seen.count(x)) missing = x;
        c.colors[e] = missing;
    }
    return c;
}

DerivedVertexColoring derived_vertex_coloring(const DartGraph& g, const EdgeColoring& sigma, int k) {
    int m = 2 * k - 1;
    if (!g.is_simple()) throw std::invalid_argument("derived_vertex_coloring: graph must be simple");
    if (!g.is_regular(k)) throw std::invalid_argument("derived_vertex_coloring: graph is not k-regular");
    if (sigma.palette != m)
        throw std::invalid_argument("derived_vertex_coloring: palette must be exactly 2k-1");
    DerivedVertexColoring dvc;
    dvc.k = k;
    dvc.assignment.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::set<int> present;
        for (int d : g.out[v]) {
            int c = sigma.colors[DartGraph::edge_of(d)];
            if (!present.insert(c).second)
                throw std::invalid_argument("derived_vertex_coloring: repeated color at vertex " +
                                            g.vertex_ids[v]);
        }
        KneserVertex kv;
        kv.m = m;
        for (int x = 1; x <= m; ++x)
            if (!present.count(x)) kv.subset.push_back(x);
        dvc.assignment[v] = kv;
    }
    return dvc;
}

EdgeColoring reconstruct_coloring(const DartGraph& g, const DerivedVertexColoring& dvc) {
    int m = 2 * dvc.k - 1;
    EdgeColoring c;
    c.palette = m;
    c.colors.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& a = dvc.assignment[g.ends[e].first].subset;
        const auto& b = dvc.assignment[g.ends[e].second].subset;
        if (!disjoint(a, b))
            throw std::invalid_argument("reconstruct_coloring: endpoint sets overlap on edge " +
                                        g.edge_ids[e]);
        std::set<int> seen(a.begin(), a.end());
        seen.insert(b.begin(), b.end());
        int missing = 0, count = 0;
        for (int x = 1; x <= m; ++x)
            if (!seen.count(x)) {
                missing = x;
                ++count;
            }
        if (count != 1)
            throw std::invalid_argument("reconstruct_coloring: no unique missing element on edge " +
                                        g.edge_ids[e]);
        c.colors[e] = missing;
    }
    return c;
}

}  // namespace oddcover

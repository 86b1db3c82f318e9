#include "oddcover/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace oddcover {

bool DartGraph::has_loop() const {
    for (int e = 0; e < num_edges(); ++e)
        if (is_loop(e)) return true;
    return false;
}

bool DartGraph::is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < num_edges(); ++e) {
        if (is_loop(e)) return false;
        auto p = std::minmax(ends[e].first, ends[e].second);
        if (!seen.insert({p.first, p.second}).second) return false;
    }
    return true;
}

bool DartGraph::is_regular(int k) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (degree(v) != k) return false;
    return true;
}

int DartGraph::vertex_index(const std::string& id) const {
    auto it = std::find(vertex_ids.begin(), vertex_ids.end(), id);
    if (it == vertex_ids.end()) throw std::invalid_argument("unknown vertex id: " + id);
    return static_cast<int>(it - vertex_ids.begin());
}

std::optional<int> DartGraph::find_vertex(const std::string& id) const {
    auto it = std::find(vertex_ids.begin(), vertex_ids.end(), id);
    if (it == vertex_ids.end()) return std::nullopt;
    return static_cast<int>(it - vertex_ids.begin());
}

int DartGraph::edge_index(const std::string& id) const {
    auto it = std::find(edge_ids.begin(), edge_ids.end(), id);
    if (it == edge_ids.end()) throw std::invalid_argument("unknown edge id: " + id);
    return static_cast<int>(it - edge_ids.begin());
}

std::string DartGraph::dart_id(int d) const {
    return edge_ids[edge_of(d)] + ((d & 1) ? "-" : "+");
}

int DartGraph::dart_index(const std::string& id) const {
    if (id.empty()) throw std::invalid_argument("empty dart id");
    char sign = id.back();
    if (sign != '+' && sign != '-') throw std::invalid_argument("dart id must end in + or -: " + id);
    int e = edge_index(id.substr(0, id.size() - 1));
    return 2 * e + (sign == '-' ? 1 : 0);
}

bool DartGraph::same_graph(const DartGraph& other) const {
    return vertex_ids == other.vertex_ids && edge_ids == other.edge_ids && ends == other.ends;
}

DartGraph build_graph(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<std::string> ids;
    ids.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) ids.push_back("e" + std::to_string(i + 1));
    return build_graph(vertices, edges, ids);
}

DartGraph build_graph(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges,
                      const std::vector<std::string>& edge_ids) {
    if (edges.size() != edge_ids.size())
        throw std::invalid_argument("edge id count does not match edge count");
    DartGraph g;
    std::unordered_map<std::string, int> index;
    for (const auto& v : vertices) {
        if (index.count(v)) throw std::invalid_argument("duplicate vertex id: " + v);
        index[v] = static_cast<int>(g.vertex_ids.size());
        g.vertex_ids.push_back(v);
    }
    std::set<std::string> eseen;
    g.out.assign(vertices.size(), {});
    for (size_t i = 0; i < edges.size(); ++i) {
        auto ut = index.find(edges[i].first);
        auto vt = index.find(edges[i].second);
        if (ut == index.end()) throw std::invalid_argument("unknown vertex reference: " + edges[i].first);
        if (vt == index.end()) throw std::invalid_argument("unknown vertex reference: " + edges[i].second);
        if (!eseen.insert(edge_ids[i]).second)
            throw std::invalid_argument("duplicate edge id: " + edge_ids[i]);
        int e = static_cast<int>(g.edge_ids.size());
        g.edge_ids.push_back(edge_ids[i]);
        g.ends.emplace_back(ut->second, vt->second);
        g.out[ut->second].push_back(2 * e);
        g.out[vt->second].push_back(2 * e + 1);
    }
    return g;
}

int girth(const DartGraph& g) {
    int best = kInfiniteGirth;
    std::set<std::pair<int, int>> pair_seen;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.is_loop(e)) return 1;
        auto p = std::minmax(g.ends[e].first, g.ends[e].second);
        if (!pair_seen.insert({p.first, p.second}).second) best = std::min(best, 2);
    }
    if (best == 2) return 2;
    int n = g.num_vertices();
    std::vector<int> dist(n), par_edge(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par_edge.begin(), par_edge.end(), -1);
        dist[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (best != kInfiniteGirth && 2 * dist[u] >= best) break;
            for (int d : g.out[u]) {
                int e = DartGraph::edge_of(d);
                if (e == par_edge[u]) continue;
                int w = g.head(d);
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    par_edge[w] = e;
                    q.push_back(w);
                } else {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

bool is_bipartite(const DartGraph& g) {
    if (g.has_loop()) return false;
    int n = g.num_vertices();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int d : g.out[u]) {
                int w = g.head(d);
                if (side[w] == -1) {
                    side[w] = side[u] ^ 1;
                    q.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

static int component_count(const DartGraph& g) {
    int n = g.num_vertices(), comps = 0;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int d : g.out[u]) {
                int w = g.head(d);
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
            }
        }
    }
    return comps;
}

bool is_connected(const DartGraph& g) {
    return g.num_vertices() <= 1 || component_count(g) == 1;
}

int betti(const DartGraph& g) {
    if (g.num_vertices() == 0) return 0;
    return g.num_edges() - g.num_vertices() + component_count(g);
}

std::vector<int> SpanningTree::path_from_root(int v) const {
    std::vector<int> path;
    for (int u = v; parent_dart[u] != -1; u = parent_vertex[u]) path.push_back(parent_dart[u]);
    std::reverse(path.begin(), path.end());
    return path;
}

SpanningTree spanning_tree(const DartGraph& g, int root) {
    if (root < 0 || root >= g.num_vertices()) throw std::invalid_argument("root out of range");
    SpanningTree t;
    t.root = root;
    t.tree_edge.assign(g.num_edges(), 0);
    t.parent_dart.assign(g.num_vertices(), -1);
    t.parent_vertex.assign(g.num_vertices(), -1);
    std::vector<char> seen(g.num_vertices(), 0);
    seen[root] = 1;
    std::deque<int> q{root};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        t.bfs_order.push_back(u);
        for (int d : g.out[u]) {
            int w = g.head(d);
            if (!seen[w]) {
                seen[w] = 1;
                t.tree_edge[DartGraph::edge_of(d)] = 1;
                t.parent_dart[w] = d;
                t.parent_vertex[w] = u;
                q.push_back(w);
            }
        }
    }
    if (static_cast<int>(t.bfs_order.size()) != g.num_vertices())
        throw std::invalid_argument("spanning_tree: graph is disconnected");
    return t;
}

// ---------------------------------------------------------------------------
// Isomorphism: color refinement on (degree, loop count, neighbor multiset),
// then backtracking that matches adjacency multiplicities.

namespace {

struct AdjMult {
    // mult[u] maps neighbor -> multiplicity; loops counted once per loop edge
    std::vector<std::map<int, int>> mult;

    explicit AdjMult(const DartGraph& g) : mult(g.num_vertices()) {
        for (int e = 0; e < g.num_edges(); ++e) {
            auto [u, v] = g.ends[e];
            mult[u][v] += 1;
            if (u != v) mult[v][u] += 1;
        }
    }
    int between(int u, int v) const {
        auto it = mult[u].find(v);
        return it == mult[u].end() ? 0 : it->second;
    }
};

// Joint refinement of two graphs; returns stable colors, or nullopt when the
// color class sizes cannot match.
std::optional<std::pair<std::vector<int>, std::vector<int>>> refine(const DartGraph& g,
                                                                    const DartGraph& h,
                                                                    const AdjMult& ag,
                                                                    const AdjMult& ah) {
    int ng = g.num_vertices(), nh = h.num_vertices();
    std::vector<int> cg(ng, 0), ch(nh, 0);
    auto initial = [](const DartGraph& gr, const AdjMult& a, std::vector<int>& c,
                      std::map<std::pair<int, int>, int>& codes, int& next) {
        for (int v = 0; v < gr.num_vertices(); ++v) {
            int loops = a.between(v, v);
            auto key = std::make_pair(gr.degree(v), loops);
            auto it = codes.find(key);
            if (it == codes.end()) it = codes.emplace(key, next++).first;
            c[v] = it->second;
        }
    };
    {
        std::map<std::pair<int, int>, int> codes;
        int next = 0;
        initial(g, ag, cg, codes, next);
        initial(h, ah, ch, codes, next);
    }
    for (int round = 0; round < ng + 2; ++round) {
        std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> codes;
        int next = 0;
        auto signature = [&](const AdjMult& a, const std::vector<int>& c, int v) {
            std::vector<std::pair<int, int>> sig;
            for (const auto& [w, m] : a.mult[v]) sig.emplace_back(c[w], m);
            std::sort(sig.begin(), sig.end());
            return std::make_pair(c[v], sig);
        };
        std::vector<int> ncg(ng), nch(nh);
        for (int v = 0; v < ng; ++v) {
            auto key = signature(ag, cg, v);
            auto it = codes.find(key);
            if (it == codes.end()) it = codes.emplace(key, next++).first;
            ncg[v] = it->second;
        }
        for (int v = 0; v < nh; ++v) {
            auto key = signature(ah, ch, v);
            auto it = codes.find(key);
            if (it == codes.end()) it = codes.emplace(key, next++).first;
            nch[v] = it->second;
        }
        bool stable = ncg == cg && nch == ch;
        cg = std::move(ncg);
        ch = std::move(nch);
        if (stable) break;
    }
    std::map<int, int> count_g, count_h;
    for (int c : cg) count_g[c]++;
    for (int c : ch) count_h[c]++;
    if (count_g != count_h) return std::nullopt;
    return std::make_pair(cg, ch);
}

struct IsoSearch {
    const DartGraph& g;
    const DartGraph& h;
    const AdjMult ag, ah;
    std::vector<int> cg, ch;
    std::vector<int> order;       // g-vertices in assignment order
    std::vector<int> map_gh;      // g vertex -> h vertex or -1
    std::vector<char> used_h;
    bool all = false;             // collect all maps (automorphisms)
    std::vector<std::vector<int>> found;

    IsoSearch(const DartGraph& g_, const DartGraph& h_) : g(g_), h(h_), ag(g_), ah(h_) {}

    bool prepare() {
        if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
        auto r = refine(g, h, ag, ah);
        if (!r) return false;
        cg = r->first;
        ch = r->second;
        // assign small color classes first
        std::map<int, int> class_size;
        for (int c : cg) class_size[c]++;
        order.resize(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return class_size[cg[a]] < class_size[cg[b]];
        });
        map_gh.assign(g.num_vertices(), -1);
        used_h.assign(h.num_vertices(), 0);
        return true;
    }

    bool consistent(int u, int w) const {
        if (cg[u] != ch[w]) return false;
        if (ag.between(u, u) != ah.between(w, w)) return false;
        for (int x = 0; x < g.num_vertices(); ++x) {
            if (map_gh[x] == -1 || x == u) continue;
            if (ag.between(u, x) != ah.between(w, map_gh[x])) return false;
        }
        return true;
    }

    bool search(size_t pos) {
        if (pos == order.size()) {
            found.push_back(map_gh);
            return !all;
        }
        int u = order[pos];
        for (int w = 0; w < h.num_vertices(); ++w) {
            if (used_h[w] || !consistent(u, w)) continue;
            map_gh[u] = w;
            used_h[w] = 1;
            if (search(pos + 1)) return true;
            map_gh[u] = -1;
            used_h[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const DartGraph& g, const DartGraph& h) {
    if (g.num_vertices() > 500 || h.num_vertices() > 500)
        throw std::invalid_argument("is_isomorphic: size budget exceeded");
    IsoSearch s(g, h);
    if (!s.prepare()) return std::nullopt;
    s.search(0);
    if (s.found.empty()) return std::nullopt;
    return s.found.front();
}

std::vector<std::vector<int>> automorphisms(const DartGraph& g) {
    if (g.num_vertices() > 50)
        throw std::invalid_argument("automorphisms: size budget exceeded");
    IsoSearch s(g, g);
    if (!s.prepare()) return {};
    s.all = true;
    s.search(0);
    return s.found;
}

// ---------------------------------------------------------------------------
// graph6

DartGraph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    size_t pos = 0;
    auto byte = [&](size_t i) -> int {
        if (i >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
        return c - 63;
    };
    long n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        // 126 escape: 3-byte or (double escape) 6-byte size
        if (s.size() >= 2 && s[1] == 126) {
            n = 0;
            for (size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
            pos = 8;
        } else {
            n = 0;
            for (size_t i = 1; i < 4; ++i) n = (n << 6) | byte(i);
            pos = 4;
        }
    }
    if (n > 2000) throw std::invalid_argument("graph6: graph too large");
    std::vector<std::string> verts;
    for (long i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    int bits_needed = static_cast<int>(n * (n - 1) / 2);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(verts[i], verts[j]);
        }
    }
    size_t expect = pos + (bits_needed + 5) / 6;
    if (s.size() != expect && !(bits_needed == 0 && s.size() == pos))
        throw std::invalid_argument("graph6: length mismatch");
    return build_graph(verts, edges);
}

std::string write_graph6(const DartGraph& g) {
    if (!g.is_simple())
        throw std::invalid_argument("write_graph6: multigraphs are not representable");
    int n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int e = 0; e < g.num_edges(); ++e) {
        adj[g.ends[e].first][g.ends[e].second] = 1;
        adj[g.ends[e].second][g.ends[e].first] = 1;
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | adj[i][j];
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// JSON

DartGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph json: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph json: missing vertices/edges");
    std::vector<std::string> verts = j["vertices"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> ids;
    for (const auto& e : j["edges"]) {
        if (!e.contains("id") || !e.contains("ends") || e["ends"].size() != 2)
            throw std::invalid_argument("graph json: bad edge record");
        ids.push_back(e["id"].get<std::string>());
        edges.emplace_back(e["ends"][0].get<std::string>(), e["ends"][1].get<std::string>());
    }
    return build_graph(verts, edges, ids);
}

std::string write_graph_json(const DartGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertex_ids;
    j["edges"] = nlohmann::json::array();
    for (int e = 0; e < g.num_edges(); ++e) {
        j["edges"].push_back({{"id", g.edge_ids[e]},
                              {"ends", {g.vertex_ids[g.ends[e].first], g.vertex_ids[g.ends[e].second]}}});
    }
    return j.dump();
}

}  // namespace oddcover

#include "oddcover/cover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "oddcover/kneser.hpp"
#include "oddcover/strong.hpp"
#include "oddcover/voltage.hpp"

namespace oddcover {

CoverCheck verify_cover(const CoveringMap& f) {
    const DartGraph& s = f.source;
    const DartGraph& t = f.target;
    if (static_cast<int>(f.vertex_map.size()) != s.num_vertices())
        return {false, "vertex_map size mismatch"};
    if (static_cast<int>(f.dart_map.size()) != s.num_darts())
        return {false, "dart_map size mismatch"};
    for (int v : f.vertex_map)
        if (v < 0 || v >= t.num_vertices()) return {false, "vertex_map image out of range"};
    for (int x : f.dart_map)
        if (x < 0 || x >= t.num_darts()) return {false, "dart_map image out of range"};
    for (int x = 0; x < s.num_darts(); ++x) {
        if (f.dart_map[DartGraph::inv(x)] != DartGraph::inv(f.dart_map[x]))
            return {false, "dart_map does not commute with inversion at dart " + s.dart_id(x)};
        if (t.head(f.dart_map[x]) != f.vertex_map[s.head(x)])
            return {false, "head condition fails at dart " + s.dart_id(x)};
    }
    for (int v = 0; v < s.num_vertices(); ++v) {
        int w = f.vertex_map[v];
        if (s.degree(v) != t.degree(w))
            return {false, "degree mismatch over vertex " + s.vertex_ids[v]};
        std::set<int> images;
        for (int x : s.out[v]) images.insert(f.dart_map[x]);
        if (static_cast<int>(images.size()) != s.degree(v))
            return {false, "darts at " + s.vertex_ids[v] + " are not mapped injectively"};
        for (int y : images)
            if (t.tail(y) != w) return {false, "dart image has wrong tail over " + s.vertex_ids[v]};
    }
    if (!is_connected(t)) return {false, "target is disconnected"};
    std::vector<char> hit(t.num_vertices(), 0);
    for (int v : f.vertex_map) hit[v] = 1;
    for (int w = 0; w < t.num_vertices(); ++w)
        if (!hit[w]) return {false, "vertex_map is not surjective"};
    return {true, ""};
}

int fold_count(const CoveringMap& f) {
    auto check = verify_cover(f);
    if (!check.ok) throw std::invalid_argument("fold_count: not a covering projection: " + check.reason);
    std::vector<int> vfiber(f.target.num_vertices(), 0);
    for (int v : f.vertex_map) ++vfiber[v];
    int d = vfiber[0];
    for (int c : vfiber)
        if (c != d) throw std::invalid_argument("fold_count: unequal vertex fibers");
    std::vector<int> efiber(f.target.num_edges(), 0);
    for (int e = 0; e < f.source.num_edges(); ++e)
        ++efiber[DartGraph::edge_of(f.dart_map[2 * e])];
    for (int c : efiber)
        if (c != d) throw std::invalid_argument("fold_count: unequal edge fibers");
    return d;
}

CoveringMap cover_from_strong_coloring(const DartGraph& g, const EdgeColoring& sigma, int k) {
    if (!is_connected(g)) throw std::invalid_argument("cover_from_strong_coloring: graph disconnected");
    if (!g.is_simple()) throw std::invalid_argument("cover_from_strong_coloring: graph not simple");
    if (!g.is_regular(k)) throw std::invalid_argument("cover_from_strong_coloring: graph not k-regular");
    if (sigma.palette != 2 * k - 1)
        throw std::invalid_argument("cover_from_strong_coloring: palette must be exactly 2k-1");
    if (!is_strong(g, sigma))
        throw std::invalid_argument("cover_from_strong_coloring: coloring is not strong");
    DerivedVertexColoring dvc = derived_vertex_coloring(g, sigma, k);
    CoveringMap f;
    f.source = g;
    f.target = odd_graph(k);
    EdgeColoring canonical = canonical_coloring(k);
    f.vertex_map.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        f.vertex_map[v] = f.target.vertex_index(dvc.assignment[v].id());
    f.dart_map.assign(g.num_darts(), -1);
    for (int x = 0; x < g.num_darts(); ++x) {
        int v = g.tail(x);
        int c = sigma.colors[DartGraph::edge_of(x)];
        for (int y : f.target.out[f.vertex_map[v]])
            if (canonical.colors[DartGraph::edge_of(y)] == c) {
                f.dart_map[x] = y;
                break;
            }
        if (f.dart_map[x] == -1)
            throw std::logic_error("cover_from_strong_coloring: missing canonical color at image star");
    }
    auto check = verify_cover(f);
    if (!check.ok)
        throw std::logic_error("cover_from_strong_coloring: construction failed verification: " +
                               check.reason);
    return f;
}

// ---------------------------------------------------------------------------

namespace {

// Edge indices between an unordered vertex pair; loops keyed by (v,v).
std::map<std::pair<int, int>, std::vector<int>> pair_edges(const DartGraph& g) {
    std::map<std::pair<int, int>, std::vector<int>> out;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto p = std::minmax(g.ends[e].first, g.ends[e].second);
        out[{p.first, p.second}].push_back(e);
    }
    return out;
}

std::multiset<int> pair_colors(const std::map<std::pair<int, int>, std::vector<int>>& pe,
                               const EdgeColoring& c, int u, int v) {
    auto p = std::minmax(u, v);
    std::multiset<int> out;
    auto it = pe.find({p.first, p.second});
    if (it != pe.end())
        for (int e : it->second) out.insert(c.colors[e]);
    return out;
}

struct ColorAutoSearch {
    const DartGraph& g;
    const EdgeColoring& sigma;
    const EdgeColoring& tau;
    std::map<std::pair<int, int>, std::vector<int>> pe;
    std::vector<int> map;  // u -> alpha(u)
    std::vector<char> used;

    ColorAutoSearch(const DartGraph& g_, const EdgeColoring& s_, const EdgeColoring& t_)
        : g(g_), sigma(s_), tau(t_), pe(pair_edges(g_)) {
        map.assign(g.num_vertices(), -1);
        used.assign(g.num_vertices(), 0);
    }

    bool consistent(int u, int w) const {
        if (g.degree(u) != g.degree(w)) return false;
        // tau colors around u must match sigma colors around alpha(u)
        if (pair_colors(pe, tau, u, u) != pair_colors(pe, sigma, w, w)) return false;
        for (int x = 0; x < g.num_vertices(); ++x) {
            if (map[x] == -1 || x == u) continue;
            if (pair_colors(pe, tau, u, x) != pair_colors(pe, sigma, w, map[x])) return false;
        }
        return true;
    }

    bool search(int pos) {
        if (pos == g.num_vertices()) return true;
        for (int w = 0; w < g.num_vertices(); ++w) {
            if (used[w] || !consistent(pos, w)) continue;
            map[pos] = w;
            used[w] = 1;
            if (search(pos + 1)) return true;
            map[pos] = -1;
            used[w] = 0;
        }
        return false;
    }
};

bool coloring_is_proper(const DartGraph& g, const EdgeColoring& c) {
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::set<int> seen;
        for (int x : g.out[v])
            if (!seen.insert(c.colors[DartGraph::edge_of(x)]).second) return false;
    }
    return true;
}

// Proper colorings are rigid: once alpha(u) is chosen the same-colored dart at
// the image determines alpha on every neighbor.
struct ProperAutoSearch {
    const DartGraph& g;
    const EdgeColoring& sigma;
    const EdgeColoring& tau;
    std::vector<int> map;
    std::vector<char> used;

    ProperAutoSearch(const DartGraph& g_, const EdgeColoring& s_, const EdgeColoring& t_)
        : g(g_), sigma(s_), tau(t_) {
        map.assign(g.num_vertices(), -1);
        used.assign(g.num_vertices(), 0);
    }

    std::multiset<int> star(const EdgeColoring& c, int v) const {
        std::multiset<int> out;
        for (int x : g.out[v]) out.insert(c.colors[DartGraph::edge_of(x)]);
        return out;
    }

    // Spread alpha(root) = w over the component; returns vertices assigned (in
    // order) or nullopt on conflict.
    std::optional<std::vector<int>> propagate(int root, int w) {
        if (used[w] || star(tau, root) != star(sigma, w)) return std::nullopt;
        std::vector<int> assigned;
        auto assign = [&](int u, int img) {
            map[u] = img;
            used[img] = 1;
            assigned.push_back(u);
        };
        auto rollback = [&]() {
            for (int u : assigned) {
                used[map[u]] = 0;
                map[u] = -1;
            }
            return std::optional<std::vector<int>>();
        };
        assign(root, w);
        for (size_t i = 0; i < assigned.size(); ++i) {
            int u = assigned[i];
            for (int x : g.out[u]) {
                int t = tau.colors[DartGraph::edge_of(x)];
                int y = -1;
                for (int cand : g.out[map[u]])
                    if (sigma.colors[DartGraph::edge_of(cand)] == t) {
                        y = cand;
                        break;
                    }
                if (y == -1) return rollback();
                int v = g.head(x), iv = g.head(y);
                if (map[v] == -1) {
                    if (used[iv] || star(tau, v) != star(sigma, iv)) return rollback();
                    assign(v, iv);
                } else if (map[v] != iv) {
                    return rollback();
                }
            }
        }
        return assigned;
    }

    bool place(int root) {
        while (root < g.num_vertices() && map[root] != -1) ++root;
        if (root == g.num_vertices()) return true;
        for (int w = 0; w < g.num_vertices(); ++w) {
            auto assigned = propagate(root, w);
            if (!assigned) continue;
            if (place(root + 1)) return true;
            for (int u : *assigned) {
                used[map[u]] = 0;
                map[u] = -1;
            }
        }
        return false;
    }

    bool search() {
        if (!place(0)) return false;
        // edge-wise certificate: every edge finds a same-colored partner
        std::vector<char> taken(g.num_edges(), 0);
        for (int e = 0; e < g.num_edges(); ++e) {
            int a = map[g.ends[e].first], b = map[g.ends[e].second];
            bool ok = false;
            for (int x : g.out[a]) {
                int f = DartGraph::edge_of(x);
                if (taken[f] || g.head(x) != b) continue;
                if (sigma.colors[f] == tau.colors[e]) {
                    taken[f] = 1;
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<std::vector<int>> colorings_equivalent(const DartGraph& g, const EdgeColoring& sigma,
                                                     const EdgeColoring& tau) {
    if (static_cast<int>(sigma.colors.size()) != g.num_edges() ||
        static_cast<int>(tau.colors.size()) != g.num_edges())
        throw std::invalid_argument("colorings_equivalent: colorings must be total");
    if (sigma.palette != tau.palette) return std::nullopt;
    if (g.num_vertices() > 500)
        throw std::invalid_argument("colorings_equivalent: size budget exceeded");
    if (!g.has_loop() && coloring_is_proper(g, sigma) && coloring_is_proper(g, tau)) {
        ProperAutoSearch s(g, sigma, tau);
        if (!s.search()) return std::nullopt;
        return s.map;
    }
    ColorAutoSearch s(g, sigma, tau);
    if (!s.search(0)) return std::nullopt;
    return s.map;
}

std::optional<std::vector<int>> fiber_respecting_isomorphism(const CoveringMap& f1,
                                                             const CoveringMap& f2) {
    if (!f1.target.same_graph(f2.target))
        throw std::invalid_argument("fiber_respecting_isomorphism: targets differ");
    const DartGraph& g1 = f1.source;
    const DartGraph& g2 = f2.source;
    if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges())
        return std::nullopt;

    // xi is determined by the image of one vertex per component: local
    // bijectivity forces every dart image, so we propagate and check.
    std::vector<int> xi(g2.num_vertices(), -1);
    std::vector<char> used(g1.num_vertices(), 0);

    // unique dart at vertex v of g1 mapping to target dart y
    auto dart_over = [&](int v, int y) -> int {
        for (int x : g1.out[v])
            if (f1.dart_map[x] == y) return x;
        return -1;
    };

    auto propagate = [&](int start2, int start1, std::vector<std::pair<int, int>>& placed) -> bool {
        std::vector<std::pair<int, int>> stack{{start2, start1}};
        xi[start2] = start1;
        used[start1] = 1;
        placed.push_back({start2, start1});
        while (!stack.empty()) {
            auto [v2, v1] = stack.back();
            stack.pop_back();
            if (f1.vertex_map[v1] != f2.vertex_map[v2]) return false;
            for (int x2 : g2.out[v2]) {
                int x1 = dart_over(v1, f2.dart_map[x2]);
                if (x1 == -1) return false;
                int h2 = g2.head(x2), h1 = g1.head(x1);
                if (xi[h2] == -1) {
                    if (used[h1]) return false;
                    xi[h2] = h1;
                    used[h1] = 1;
                    placed.push_back({h2, h1});
                    stack.push_back({h2, h1});
                } else if (xi[h2] != h1) {
                    return false;
                }
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, int from) -> bool {
        int v2 = -1;
        for (int v = from; v < g2.num_vertices(); ++v)
            if (xi[v] == -1) {
                v2 = v;
                break;
            }
        if (v2 == -1) return true;
        for (int v1 = 0; v1 < g1.num_vertices(); ++v1) {
            if (used[v1] || f1.vertex_map[v1] != f2.vertex_map[v2]) continue;
            std::vector<std::pair<int, int>> placed;
            if (propagate(v2, v1, placed) && self(self, v2 + 1)) return true;
            for (auto [a, b] : placed) {
                xi[a] = -1;
                used[b] = 0;
            }
        }
        return false;
    };

    if (!rec(rec, 0)) return std::nullopt;
    return xi;
}

VoltageAssignment voltage_from_cover(const CoveringMap& f, const SpanningTree& tree) {
    auto check = verify_cover(f);
    if (!check.ok)
        throw std::invalid_argument("voltage_from_cover: not a covering projection: " + check.reason);
    int d = fold_count(f);
    const DartGraph& base = f.target;
    const DartGraph& total = f.source;

    std::vector<int> label(total.num_vertices(), -1);
    // basepoint fiber in source input order
    int next = 0;
    for (int v = 0; v < total.num_vertices(); ++v)
        if (f.vertex_map[v] == tree.root) label[v] = next++;
    // lift tree darts; tree voltages come out trivial by construction
    auto dart_over = [&](int v, int y) -> int {
        for (int x : total.out[v])
            if (f.dart_map[x] == y) return x;
        throw std::logic_error("voltage_from_cover: missing dart over fiber");
    };
    std::vector<std::vector<int>> fiber(base.num_vertices());
    for (int v = 0; v < total.num_vertices(); ++v) fiber[f.vertex_map[v]].push_back(v);
    for (int w : tree.bfs_order) {
        if (w == tree.root) continue;
        int y = tree.parent_dart[w];
        int u = tree.parent_vertex[w];
        for (int ut : fiber[u]) {
            int x = dart_over(ut, y);
            label[total.head(x)] = label[ut];
        }
    }
    VoltageAssignment kappa = trivial_assignment(base, d);
    for (int y = 0; y < base.num_darts(); ++y) {
        int u = base.tail(y);
        Perm p;
        p.img.assign(d, -1);
        for (int ut : fiber[u]) {
            int x = dart_over(ut, y);
            p.img[label[ut]] = label[total.head(x)];
        }
        for (int i : p.img)
            if (i < 0) throw std::logic_error("voltage_from_cover: incomplete fiber labeling");
        kappa.voltages[y] = p;
    }
    for (int x = 0; x < base.num_darts(); ++x)
        if (!(kappa.voltages[DartGraph::inv(x)] == perm_inverse(kappa.voltages[x])))
            throw std::logic_error("voltage_from_cover: involution rule violated");
    return kappa;
}

std::optional<std::vector<int>> covers_equivalent_direct(const CoveringMap& f1,
                                                         const CoveringMap& f2) {
    if (!f1.target.same_graph(f2.target))
        throw std::invalid_argument("covers_equivalent_direct: targets differ");
    auto c1 = verify_cover(f1);
    auto c2 = verify_cover(f2);
    if (!c1.ok || !c2.ok)
        throw std::invalid_argument("covers_equivalent_direct: inputs are not verified covers");
    if (fold_count(f1) != fold_count(f2)) return std::nullopt;
    SpanningTree tree = spanning_tree(f1.target, 0);
    VoltageAssignment kappa = voltage_from_cover(f1, tree);
    VoltageAssignment lambda = voltage_from_cover(f2, tree);
    if (!covers_equivalent_voltage(kappa, lambda, tree, 0)) return std::nullopt;
    auto xi = fiber_respecting_isomorphism(f1, f2);
    if (!xi) throw std::logic_error("covers_equivalent_direct: witness search disagrees with voltage test");
    return xi;
}

// ---------------------------------------------------------------------------
// JSON

CoveringMap parse_cover_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("cover json: ") + e.what());
    }
    CoveringMap f;
    f.source = parse_graph_json(j.at("source").dump());
    f.target = parse_graph_json(j.at("target").dump());
    f.vertex_map.assign(f.source.num_vertices(), -1);
    for (const auto& [key, val] : j.at("vertex_map").items())
        f.vertex_map[f.source.vertex_index(key)] = f.target.vertex_index(val.get<std::string>());
    for (int v : f.vertex_map)
        if (v == -1) throw std::invalid_argument("cover json: vertex_map is partial");
    f.dart_map.assign(f.source.num_darts(), -1);
    for (const auto& [key, val] : j.at("dart_map").items())
        f.dart_map[f.source.dart_index(key)] = f.target.dart_index(val.get<std::string>());
    for (int x : f.dart_map)
        if (x == -1) throw std::invalid_argument("cover json: dart_map is partial");
    return f;
}

std::string write_cover_json(const CoveringMap& f) {
    nlohmann::json j;
    j["source"] = nlohmann::json::parse(write_graph_json(f.source));
    j["target"] = nlohmann::json::parse(write_graph_json(f.target));
    j["vertex_map"] = nlohmann::json::object();
    for (int v = 0; v < f.source.num_vertices(); ++v)
        j["vertex_map"][f.source.vertex_ids[v]] = f.target.vertex_ids[f.vertex_map[v]];
    j["dart_map"] = nlohmann::json::object();
    for (int x = 0; x < f.source.num_darts(); ++x)
        j["dart_map"][f.source.dart_id(x)] = f.target.dart_id(f.dart_map[x]);
    return j.dump();
}

}  // namespace oddcover

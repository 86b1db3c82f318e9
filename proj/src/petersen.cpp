#include "oddcover/petersen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "oddcover/kneser.hpp"

namespace oddcover {

namespace {

const DartGraph& petersen() {
    static const DartGraph p = odd_graph(3);
    return p;
}

const EdgeColoring& sigma3() {
    static const EdgeColoring s = canonical_coloring(3);
    return s;
}

bool edges_adjacent(const DartGraph& g, int e, int f) {
    auto [a, b] = g.ends[e];
    auto [c, d] = g.ends[f];
    return a == c || a == d || b == c || b == d;
}

void require_cubic(const DartGraph& g, const char* who) {
    if (!g.is_regular(3)) throw std::invalid_argument(std::string(who) + ": graph is not cubic");
}

// Common endpoint of the three image edges at a vertex; the Petersen graph is
// triangle-free, so pairwise adjacent distinct edges form a star.
int induced_image_vertex(const DartGraph& g, const PetersenColoring& xi, int v) {
    const DartGraph& p = petersen();
    std::vector<int> imgs;
    for (int d : g.out[v]) imgs.push_back(xi.edge_map[DartGraph::edge_of(d)]);
    for (int w : {p.ends[imgs[0]].first, p.ends[imgs[0]].second}) {
        bool all = true;
        for (int e : imgs) {
            if (p.ends[e].first != w && p.ends[e].second != w) {
                all = false;
                break;
            }
        }
        if (all) return w;
    }
    throw std::logic_error("induced vertex map undefined");
}

int petersen_edge_between(int u, int v) {
    const DartGraph& p = petersen();
    for (int d : p.out[u])
        if (p.head(d) == v) return DartGraph::edge_of(d);
    return -1;
}

}  // namespace

bool is_petersen_coloring(const DartGraph& g, const PetersenColoring& xi) {
    require_cubic(g, "is_petersen_coloring");
    if (static_cast<int>(xi.edge_map.size()) != g.num_edges())
        throw std::invalid_argument("is_petersen_coloring: edge map is partial");
    const DartGraph& p = petersen();
    for (int e : xi.edge_map)
        if (e < 0 || e >= p.num_edges())
            throw std::invalid_argument("is_petersen_coloring: image out of range");
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& darts = g.out[v];
        for (size_t i = 0; i < darts.size(); ++i)
            for (size_t j = i + 1; j < darts.size(); ++j) {
                int e = DartGraph::edge_of(darts[i]);
                int f = DartGraph::edge_of(darts[j]);
                if (e == f) continue;  // parallel pair shares both stars
                int ie = xi.edge_map[e], jf = xi.edge_map[f];
                if (ie == jf || !edges_adjacent(p, ie, jf)) return false;
            }
    }
    return true;
}

bool is_homomorphism(const DartGraph& g, const PetersenColoring& xi) {
    if (!is_petersen_coloring(g, xi))
        throw std::invalid_argument("is_homomorphism: not a Petersen coloring");
    for (int e = 0; e < g.num_edges(); ++e) {
        int hu = induced_image_vertex(g, xi, g.ends[e].first);
        int hv = induced_image_vertex(g, xi, g.ends[e].second);
        if (hu == hv || petersen_edge_between(hu, hv) == -1) return false;
    }
    return true;
}

PetersenColoring normal_to_petersen(const DartGraph& g, const EdgeColoring& phi) {
    if (!is_normal(g, phi)) throw std::invalid_argument("normal_to_petersen: coloring is not normal");
    const DartGraph& p = petersen();
    PetersenColoring xi;
    xi.edge_map.resize(g.num_edges());
    auto other_colors = [&](int v, int e) {
        std::set<int> s;
        for (int d : g.out[v]) {
            int f = DartGraph::edge_of(d);
            if (f != e) s.insert(phi.colors[f]);
        }
        return s;
    };
    auto vertex_of_pair = [&](const std::set<int>& pair) {
        KneserVertex kv;
        kv.m = 5;
        kv.subset.assign(pair.begin(), pair.end());
        return p.vertex_index(kv.id());
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        int c = phi.colors[e];
        std::set<int> a = other_colors(g.ends[e].first, e);
        std::set<int> b = other_colors(g.ends[e].second, e);
        std::set<int> target_a = a, target_b;
        if (a == b) {
            // poor: pair A with the leftover two colors
            for (int x = 1; x <= 5; ++x)
                if (x != c && !a.count(x)) target_b.insert(x);
        } else {
            std::vector<int> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
            if (!inter.empty()) throw std::logic_error("normal_to_petersen: edge neither rich nor poor");
            target_b = b;
        }
        int pe = petersen_edge_between(vertex_of_pair(target_a), vertex_of_pair(target_b));
        if (pe == -1) throw std::logic_error("normal_to_petersen: image pair not disjoint");
        xi.edge_map[e] = pe;
    }
    if (!is_petersen_coloring(g, xi))
        throw std::logic_error("normal_to_petersen: construction failed verification");
    return xi;
}

PetersenColoring petersen_from_cover(const CoveringMap& f) {
    auto check = verify_cover(f);
    if (!check.ok)
        throw std::invalid_argument("petersen_from_cover: not a covering projection: " + check.reason);
    if (!f.target.same_graph(petersen()))
        throw std::invalid_argument("petersen_from_cover: target is not the Petersen graph");
    PetersenColoring xi;
    xi.edge_map.resize(f.source.num_edges());
    for (int e = 0; e < f.source.num_edges(); ++e)
        xi.edge_map[e] = DartGraph::edge_of(f.dart_map[2 * e]);
    return xi;
}

EdgeColoring strong5_from_petersen_hom(const DartGraph& g, const PetersenColoring& xi) {
    if (!is_homomorphism(g, xi))
        throw std::invalid_argument("strong5_from_petersen_hom: coloring is not a homomorphism");
    EdgeColoring c;
    c.palette = 5;
    c.colors.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) c.colors[e] = sigma3().colors[xi.edge_map[e]];
    if (!is_strong(g, c)) throw std::logic_error("strong5_from_petersen_hom: lifted coloring not strong");
    return c;
}

CoveringMap cover_from_petersen_hom(const DartGraph& g, const PetersenColoring& xi) {
    if (!is_homomorphism(g, xi))
        throw std::invalid_argument("cover_from_petersen_hom: coloring is not a homomorphism");
    CoveringMap f;
    f.source = g;
    f.target = petersen();
    f.vertex_map.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) f.vertex_map[v] = induced_image_vertex(g, xi, v);
    f.dart_map.resize(g.num_darts());
    for (int x = 0; x < g.num_darts(); ++x) {
        int pv = f.vertex_map[g.tail(x)];
        int pe = xi.edge_map[DartGraph::edge_of(x)];
        f.dart_map[x] = (f.target.ends[pe].first == pv) ? 2 * pe : 2 * pe + 1;
    }
    auto check = verify_cover(f);
    if (!check.ok)
        throw std::logic_error("cover_from_petersen_hom: induced map failed verification: " + check.reason);
    return f;
}

EquivalenceReport equivalence_report(const DartGraph& g, const SearchBudget& budget) {
    require_cubic(g, "equivalence_report");
    EquivalenceReport rep;
    SolveResult res = chi_strong(g, {}, {}, budget);
    if (res.proof_state != ProofState::optimal) return rep;  // inconclusive
    rep.conclusive = true;
    rep.chi_strong_is_5 = (res.chi_strong == 5);
    if (!rep.chi_strong_is_5) return rep;
    EdgeColoring sigma = res.witness;
    rep.strong_witness = sigma;
    CoveringMap cover = cover_from_strong_coloring(g, sigma, 3);
    rep.cover_witness = cover;
    rep.covers_petersen = true;
    // a strong 5-coloring of a cubic graph is normal with every edge rich
    bool all_rich = is_normal(g, sigma);
    for (int e = 0; e < g.num_edges() && all_rich; ++e)
        all_rich = (edge_class(g, sigma, e) == EdgeClass::rich);
    rep.normal_all_rich = all_rich;
    PetersenColoring xi = petersen_from_cover(cover);
    rep.petersen_witness = xi;
    rep.petersen_homomorphism = is_homomorphism(g, xi);
    if (!rep.normal_all_rich || !rep.petersen_homomorphism)
        throw std::logic_error("equivalence_report: four-way equivalence violated");
    return rep;
}

PetersenColoring parse_petersen_coloring_json(const DartGraph& g, const DartGraph& p,
                                              const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("petersen coloring json: ") + e.what());
    }
    PetersenColoring xi;
    xi.edge_map.assign(g.num_edges(), -1);
    try {
        for (const auto& [key, val] : j.at("edge_map").items())
            xi.edge_map[g.edge_index(key)] = p.edge_index(val.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("petersen coloring json: ") + e.what());
    }
    for (int e : xi.edge_map)
        if (e == -1) throw std::invalid_argument("petersen coloring json: partial edge map");
    return xi;
}

std::string write_petersen_coloring_json(const DartGraph& g, const DartGraph& p,
                                         const PetersenColoring& xi) {
    nlohmann::json j;
    j["edge_map"] = nlohmann::json::object();
    for (int e = 0; e < g.num_edges(); ++e) j["edge_map"][g.edge_ids[e]] = p.edge_ids[xi.edge_map[e]];
    return j.dump();
}

}  // namespace oddcover

#include "oddcover/voltage.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "oddcover/kneser.hpp"

namespace oddcover {

Perm Perm::identity(int d) {
    Perm p;
    p.img.resize(d);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img[i] != i) return false;
    return true;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("perm_compose: degree mismatch");
    Perm r;
    r.img.resize(p.degree());
    for (int i = 0; i < p.degree(); ++i) r.img[i] = q.img[p.img[i]];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r;
    r.img.resize(p.degree());
    for (int i = 0; i < p.degree(); ++i) r.img[p.img[i]] = i;
    return r;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> type;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = p.img[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

bool is_involution(const Perm& p) {
    for (int i = 0; i < p.degree(); ++i)
        if (p.img[p.img[i]] != i) return false;
    return true;
}

Perm perm_from_images(const std::vector<int>& one_based) {
    Perm p;
    p.img.resize(one_based.size());
    std::vector<char> seen(one_based.size(), 0);
    for (size_t i = 0; i < one_based.size(); ++i) {
        int x = one_based[i] - 1;
        if (x < 0 || x >= static_cast<int>(one_based.size()) || seen[x])
            throw std::invalid_argument("not a permutation image list");
        seen[x] = 1;
        p.img[i] = x;
    }
    return p;
}

std::vector<int> perm_to_images(const Perm& p) {
    std::vector<int> out(p.degree());
    for (int i = 0; i < p.degree(); ++i) out[i] = p.img[i] + 1;
    return out;
}

void VoltageAssignment::set_edge_voltage(int e, const Perm& p) {
    if (p.degree() != d) throw std::invalid_argument("voltage degree mismatch");
    voltages[2 * e] = p;
    voltages[2 * e + 1] = perm_inverse(p);
}

VoltageAssignment trivial_assignment(const DartGraph& base, int d) {
    VoltageAssignment v;
    v.base = base;
    v.d = d;
    v.voltages.assign(base.num_darts(), Perm::identity(d));
    return v;
}

DerivedGraph derived_lift(const VoltageAssignment& kappa) {
    const DartGraph& b = kappa.base;
    int d = kappa.d;
    std::vector<std::string> verts;
    verts.reserve(static_cast<size_t>(b.num_vertices()) * d);
    for (int u = 0; u < b.num_vertices(); ++u)
        for (int i = 0; i < d; ++i) verts.push_back(b.vertex_ids[u] + "@" + std::to_string(i + 1));
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> eids;
    for (int e = 0; e < b.num_edges(); ++e) {
        auto [u, v] = b.ends[e];
        const Perm& p = kappa.voltages[2 * e];
        for (int i = 0; i < d; ++i) {
            edges.emplace_back(verts[u * d + i], verts[v * d + p.apply(i)]);
            eids.push_back(b.edge_ids[e] + "@" + std::to_string(i + 1));
        }
    }
    DerivedGraph out;
    out.lift = build_graph(verts, edges, eids);
    out.projection.source = out.lift;
    out.projection.target = b;
    out.projection.vertex_map.resize(out.lift.num_vertices());
    for (int u = 0; u < b.num_vertices(); ++u)
        for (int i = 0; i < d; ++i) out.projection.vertex_map[u * d + i] = u;
    out.projection.dart_map.resize(out.lift.num_darts());
    for (int e = 0; e < b.num_edges(); ++e)
        for (int i = 0; i < d; ++i) {
            out.projection.dart_map[2 * (e * d + i)] = 2 * e;
            out.projection.dart_map[2 * (e * d + i) + 1] = 2 * e + 1;
        }
    return out;
}

VoltageAssignment t_reduction(const VoltageAssignment& kappa, const SpanningTree& tree, int root) {
    if (tree.root != root) throw std::invalid_argument("t_reduction: tree is rooted elsewhere");
    const DartGraph& b = kappa.base;
    VoltageAssignment red = trivial_assignment(b, kappa.d);
    for (int e = 0; e < b.num_edges(); ++e) {
        if (tree.tree_edge[e]) continue;
        int z = 2 * e;
        int u = b.tail(z), v = b.head(z);
        Perm theta = Perm::identity(kappa.d);
        for (int x : tree.path_from_root(u)) theta = perm_compose(theta, kappa.voltages[x]);
        theta = perm_compose(theta, kappa.voltages[z]);
        auto back = tree.path_from_root(v);
        for (auto it = back.rbegin(); it != back.rend(); ++it)
            theta = perm_compose(theta, kappa.voltages[DartGraph::inv(*it)]);
        red.set_edge_voltage(e, theta);
    }
    return red;
}

bool is_transitive(const std::vector<Perm>& generators, int d) {
    for (const Perm& g : generators)
        if (g.degree() != d) throw std::invalid_argument("is_transitive: degree mismatch");
    if (d <= 1) return true;
    std::vector<char> in_orbit(d, 0);
    in_orbit[0] = 1;
    std::vector<int> stack{0};
    int size = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (const Perm& g : generators) {
            for (int j : {g.apply(i), perm_inverse(g).apply(i)}) {
                if (!in_orbit[j]) {
                    in_orbit[j] = 1;
                    stack.push_back(j);
                    ++size;
                }
            }
        }
    }
    return size == d;
}

bool lift_connected(const VoltageAssignment& kappa) {
    if (!is_connected(kappa.base)) throw std::invalid_argument("lift_connected: base is disconnected");
    SpanningTree t = spanning_tree(kappa.base, 0);
    VoltageAssignment red = t_reduction(kappa, t, 0);
    std::vector<Perm> gens;
    for (int e = 0; e < kappa.base.num_edges(); ++e)
        if (!t.tree_edge[e]) gens.push_back(red.voltages[2 * e]);
    return is_transitive(gens, kappa.d);
}

static Perm conjugate(const Perm& g, const Perm& p) {
    return perm_compose(perm_compose(g, p), perm_inverse(g));
}

std::optional<Perm> covers_equivalent_voltage(const VoltageAssignment& kappa,
                                              const VoltageAssignment& lambda,
                                              const SpanningTree& tree, int root) {
    if (!kappa.base.same_graph(lambda.base))
        throw std::invalid_argument("covers_equivalent_voltage: different base graphs");
    if (kappa.d != lambda.d)
        throw std::invalid_argument("covers_equivalent_voltage: different degrees");
    VoltageAssignment kr = t_reduction(kappa, tree, root);
    VoltageAssignment lr = t_reduction(lambda, tree, root);
    std::vector<int> cotree;
    for (int e = 0; e < kappa.base.num_edges(); ++e)
        if (!tree.tree_edge[e]) cotree.push_back(e);
    // conjugation preserves cycle structure, so mismatching types settle it
    for (int e : cotree)
        if (cycle_type(kr.voltages[2 * e]) != cycle_type(lr.voltages[2 * e])) return std::nullopt;
    std::vector<int> ids(kappa.d);
    std::iota(ids.begin(), ids.end(), 0);
    do {
        Perm g;
        g.img = ids;
        bool ok = true;
        for (int e : cotree) {
            if (!(lr.voltages[2 * e] == conjugate(g, kr.voltages[2 * e]))) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    } while (std::next_permutation(ids.begin(), ids.end()));
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Witness search for non-equivalent covers with isomorphic lifts.

namespace {

// Dart map induced on a simple graph by a vertex bijection.
std::vector<int> dart_map_of_automorphism(const DartGraph& g, const std::vector<int>& alpha) {
    std::vector<int> dm(g.num_darts(), -1);
    for (int x = 0; x < g.num_darts(); ++x) {
        int iu = alpha[g.tail(x)], iv = alpha[g.head(x)];
        for (int y : g.out[iu])
            if (g.head(y) == iv) {
                dm[x] = y;
                break;
            }
        if (dm[x] == -1) throw std::logic_error("vertex map is not an automorphism");
    }
    return dm;
}

std::vector<Perm> involution_values(int d) {
    std::vector<int> ids(d);
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<Perm> vals;
    do {
        Perm p;
        p.img = ids;
        if (is_involution(p)) vals.push_back(p);
    } while (std::next_permutation(ids.begin(), ids.end()));
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::vector<Perm> non_involution_values(int d) {
    std::vector<int> ids(d);
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<Perm> vals;
    do {
        Perm p;
        p.img = ids;
        if (!is_involution(p)) vals.push_back(p);
    } while (std::next_permutation(ids.begin(), ids.end()));
    std::sort(vals.begin(), vals.end());
    return vals;
}

}  // namespace

NonequivPair find_nonequivalent_pair(int d, double budget_seconds) {
    NonequivPair result;
    result.status = "exhausted";
    DartGraph base = odd_graph(3);
    SpanningTree tree = spanning_tree(base, 0);
    std::vector<int> cotree;
    for (int e = 0; e < base.num_edges(); ++e)
        if (!tree.tree_edge[e]) cotree.push_back(e);
    auto autos = automorphisms(base);
    std::sort(autos.begin(), autos.end());
    std::vector<std::vector<int>> auto_dart_maps;
    for (const auto& a : autos) auto_dart_maps.push_back(dart_map_of_automorphism(base, a));

    auto clock_start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count();
    };
    if (budget_seconds <= 0) return result;

    std::vector<Perm> ivals = involution_values(d);
    size_t m = cotree.size();
    std::vector<size_t> idx(m, 0);

    auto build = [&](const std::vector<size_t>& choice) {
        VoltageAssignment k = trivial_assignment(base, d);
        for (size_t i = 0; i < m; ++i) k.set_edge_voltage(cotree[i], ivals[choice[i]]);
        return k;
    };
    auto twist = [&](const VoltageAssignment& k, size_t ai) {
        // lambda(x) = kappa(alpha(x)); the lifts are isomorphic via alpha
        VoltageAssignment l = trivial_assignment(base, d);
        const auto& dm = auto_dart_maps[ai];
        for (int e = 0; e < base.num_edges(); ++e) l.voltages[2 * e] = k.voltages[dm[2 * e]];
        for (int e = 0; e < base.num_edges(); ++e)
            l.voltages[2 * e + 1] = perm_inverse(l.voltages[2 * e]);
        return t_reduction(l, tree, 0);
    };
    auto finish = [&](const VoltageAssignment& k, const VoltageAssignment& l) {
        result.found = true;
        result.status = "found";
        result.kappa = k;
        result.lambda = l;
        DerivedGraph lk = derived_lift(k);
        DerivedGraph ll = derived_lift(l);
        auto iso = is_isomorphic(ll.lift, lk.lift);
        if (!iso) throw std::logic_error("expected isomorphic lifts");
        result.lift_isomorphism = *iso;
    };

    // Phase 1: involution-valued reduced assignments twisted by a base
    // automorphism. The twist keeps the lift's isomorphism type, so only the
    // conjugacy test is needed.
    bool more = true;
    while (more) {
        if (elapsed() > budget_seconds) {
            result.status = "exhausted";
            return result;
        }
        VoltageAssignment k = build(idx);
        if (lift_connected(k)) {
            for (size_t ai = 0; ai < autos.size(); ++ai) {
                VoltageAssignment l = twist(k, ai);
                if (!covers_equivalent_voltage(k, l, tree, 0)) {
                    finish(k, l);
                    return result;
                }
                if (elapsed() > budget_seconds) return result;
            }
        }
        // odometer
        more = false;
        for (size_t i = m; i-- > 0;) {
            if (++idx[i] < ivals.size()) {
                more = true;
                break;
            }
            idx[i] = 0;
        }
    }

    // Phase 2: allow one non-involution value, pairing each connected
    // involution assignment with a single-position replacement whose lift is
    // isomorphic. Cycle types differ at the replaced dart, so conjugacy is
    // impossible and only the isomorphism check remains.
    std::vector<Perm> nvals = non_involution_values(d);
    std::fill(idx.begin(), idx.end(), 0);
    more = true;
    while (more) {
        if (elapsed() > budget_seconds) {
            result.status = "exhausted";
            return result;
        }
        VoltageAssignment k = build(idx);
        if (lift_connected(k)) {
            DerivedGraph lk = derived_lift(k);
            for (size_t pos = 0; pos < m; ++pos) {
                for (const Perm& w : nvals) {
                    VoltageAssignment l = k;
                    l.set_edge_voltage(cotree[pos], w);
                    if (!lift_connected(l)) continue;
                    DerivedGraph ll = derived_lift(l);
                    if (is_isomorphic(ll.lift, lk.lift)) {
                        finish(k, l);
                        return result;
                    }
                    if (elapsed() > budget_seconds) {
                        result.status = "exhausted";
                        return result;
                    }
                }
            }
        }
        more = false;
        for (size_t i = m; i-- > 0;) {
            if (++idx[i] < ivals.size()) {
                more = true;
                break;
            }
            idx[i] = 0;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Z_2-homology lifts

BinaryVoltage homology_voltage(const DartGraph& h, const SpanningTree& tree) {
    int b = betti(h);
    if (b > 12) throw std::invalid_argument("homology_voltage: cycle rank above 12");
    BinaryVoltage bv;
    bv.base = h;
    bv.beta = b;
    bv.edge_bits.assign(h.num_edges(), 0);
    int i = 0;
    for (int e = 0; e < h.num_edges(); ++e)
        if (!tree.tree_edge[e]) bv.edge_bits[e] = 1u << i++;
    if (i != b) throw std::logic_error("cotree edge count does not match cycle rank");
    return bv;
}

VoltageAssignment binary_to_permutation(const BinaryVoltage& bv) {
    int d = 1 << bv.beta;
    VoltageAssignment k = trivial_assignment(bv.base, d);
    for (int e = 0; e < bv.base.num_edges(); ++e) {
        if (bv.edge_bits[e] == 0) continue;
        Perm p;
        p.img.resize(d);
        for (int i = 0; i < d; ++i) p.img[i] = i ^ static_cast<int>(bv.edge_bits[e]);
        k.set_edge_voltage(e, p);
    }
    return k;
}

DerivedGraph girth_double(const DartGraph& h) {
    int g = girth(h);
    if (g == kInfiniteGirth) throw std::invalid_argument("girth_double: forest has no cycle");
    SpanningTree tree = spanning_tree(h, 0);
    BinaryVoltage bv = homology_voltage(h, tree);
    DerivedGraph out = derived_lift(binary_to_permutation(bv));
    if (!is_connected(out.lift)) throw std::logic_error("girth_double: lift is disconnected");
    if (girth(out.lift) != 2 * g) throw std::logic_error("girth_double: girth is not doubled");
    if (is_bipartite(h) && !is_bipartite(out.lift))
        throw std::logic_error("girth_double: bipartiteness lost");
    return out;
}

CounterexampleGraph counterexample_family(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("counterexample_family: n must be 1..3");
    DartGraph g = build_graph({"u", "v"}, {{"u", "v"}, {"u", "v"}, {"u", "v"}});
    for (int i = 1; i < n; ++i) g = girth_double(g).lift;
    CounterexampleGraph out;
    out.graph = g;
    out.girth_value = girth(g);
    out.bipartite = is_bipartite(g);
    out.connected = is_connected(g);
    return out;
}

// ---------------------------------------------------------------------------
// JSON

VoltageAssignment parse_voltage_json(const DartGraph& base, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("voltage json: ") + e.what());
    }
    if (!j.contains("d") || !j.contains("voltages"))
        throw std::invalid_argument("voltage json: missing d/voltages");
    int d = j["d"].get<int>();
    if (d < 1) throw std::invalid_argument("voltage json: d must be positive");
    VoltageAssignment v = trivial_assignment(base, d);
    std::vector<char> given(base.num_darts(), 0);
    for (const auto& [key, val] : j["voltages"].items()) {
        int x = base.dart_index(key);
        Perm p = perm_from_images(val.get<std::vector<int>>());
        if (p.degree() != d) throw std::invalid_argument("voltage json: wrong degree on " + key);
        int xi = DartGraph::inv(x);
        if (given[x] || (given[xi] && !(v.voltages[x] == p)))
            throw std::invalid_argument("voltage json: conflicting voltages on edge of " + key);
        v.voltages[x] = p;
        v.voltages[xi] = perm_inverse(p);
        given[x] = 1;
    }
    return v;
}

std::string write_voltage_json(const VoltageAssignment& v) {
    nlohmann::json j;
    j["d"] = v.d;
    j["voltages"] = nlohmann::json::object();
    for (int e = 0; e < v.base.num_edges(); ++e)
        j["voltages"][v.base.dart_id(2 * e)] = perm_to_images(v.voltages[2 * e]);
    return j.dump();
}

BinaryVoltage parse_binary_voltage_json(const DartGraph& base, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("binary voltage json: ") + e.what());
    }
    BinaryVoltage bv;
    bv.base = base;
    bv.beta = j.at("beta").get<int>();
    if (bv.beta < 0 || bv.beta > 12) throw std::invalid_argument("binary voltage json: beta out of range");
    bv.edge_bits.assign(base.num_edges(), 0);
    for (const auto& [key, val] : j.at("voltages").items()) {
        int e = base.edge_index(key);
        auto bits = val.get<std::vector<int>>();
        if (static_cast<int>(bits.size()) != bv.beta)
            throw std::invalid_argument("binary voltage json: wrong vector length on " + key);
        std::uint32_t word = 0;
        for (int i = 0; i < bv.beta; ++i)
            if (bits[i]) word |= 1u << i;
        bv.edge_bits[e] = word;
    }
    return bv;
}

std::string write_binary_voltage_json(const BinaryVoltage& v) {
    nlohmann::json j;
    j["beta"] = v.beta;
    j["voltages"] = nlohmann::json::object();
    for (int e = 0; e < v.base.num_edges(); ++e) {
        std::vector<int> bits(v.beta, 0);
        for (int i = 0; i < v.beta; ++i)
            if (v.edge_bits[e] & (1u << i)) bits[i] = 1;
        j["voltages"][v.base.edge_ids[e]] = bits;
    }
    return j.dump();
}

}  // namespace oddcover

#include "oddcover/strong.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>

namespace oddcover {

bool is_proper(const DartGraph& g, const EdgeColoring& phi) {
    if (static_cast<int>(phi.colors.size()) != g.num_edges())
        throw std::invalid_argument("is_proper: partial coloring");
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::set<int> seen;
        for (int d : g.out[v])
            if (!seen.insert(phi.colors[DartGraph::edge_of(d)]).second) return false;
    }
    return true;
}

bool is_strong(const DartGraph& g, const EdgeColoring& phi) {
    if (!is_proper(g, phi)) return false;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.ends[e];
        for (int du : g.out[u]) {
            int f = DartGraph::edge_of(du);
            if (f == e) continue;
            for (int dv : g.out[v]) {
                int h = DartGraph::edge_of(dv);
                if (h == e || h == f) continue;
                if (phi.colors[f] == phi.colors[h]) return false;
            }
        }
    }
    return true;
}

bool is_strong_via_induced_matchings(const DartGraph& g, const EdgeColoring& phi) {
    if (static_cast<int>(phi.colors.size()) != g.num_edges())
        throw std::invalid_argument("is_strong_via_induced_matchings: partial coloring");
    std::vector<std::vector<int>> classes(phi.palette + 1);
    for (int e = 0; e < g.num_edges(); ++e) {
        if (phi.colors[e] < 1 || phi.colors[e] > phi.palette) return false;
        classes[phi.colors[e]].push_back(e);
    }
    std::set<std::pair<int, int>> present;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto p = std::minmax(g.ends[e].first, g.ends[e].second);
        present.insert({p.first, p.second});
    }
    for (const auto& cls : classes) {
        for (size_t i = 0; i < cls.size(); ++i) {
            auto [a, b] = g.ends[cls[i]];
            if (a == b) return false;  // loop can never sit in a matching
            for (size_t j = i + 1; j < cls.size(); ++j) {
                auto [c, d] = g.ends[cls[j]];
                // matching
                if (a == c || a == d || b == c || b == d) return false;
                // induced: no edge between the two members
                for (int x : {a, b})
                    for (int y : {c, d}) {
                        auto p = std::minmax(x, y);
                        if (present.count({p.first, p.second})) return false;
                    }
            }
        }
    }
    return true;
}

static std::vector<int> adjacent_edges(const DartGraph& g, int e) {
    std::set<int> adj;
    for (int side : {g.ends[e].first, g.ends[e].second})
        for (int d : g.out[side]) {
            int f = DartGraph::edge_of(d);
            if (f != e) adj.insert(f);
        }
    return {adj.begin(), adj.end()};
}

EdgeClass edge_class(const DartGraph& g, const EdgeColoring& phi, int e) {
    if (!is_proper(g, phi)) throw std::invalid_argument("edge_class: coloring is not proper");
    auto adj = adjacent_edges(g, e);
    std::set<int> colors;
    for (int f : adj) colors.insert(phi.colors[f]);
    if (colors.size() == adj.size()) return EdgeClass::rich;
    bool cubic_interior = g.degree(g.ends[e].first) == 3 && g.degree(g.ends[e].second) == 3 &&
                          adj.size() == 4;
    if (cubic_interior && colors.size() == 2) return EdgeClass::poor;
    return EdgeClass::neither;
}

bool is_normal(const DartGraph& g, const EdgeColoring& phi) {
    if (!g.is_regular(3)) throw std::invalid_argument("is_normal: graph is not cubic");
    if (phi.palette != 5) throw std::invalid_argument("is_normal: palette must be 5");
    for (int e = 0; e < g.num_edges(); ++e)
        if (edge_class(g, phi, e) == EdgeClass::neither) return false;
    return true;
}

std::vector<std::vector<int>> strong_conflict_graph(const DartGraph& g) {
    int n = g.num_edges();
    std::vector<std::set<int>> conf(n);
    // adjacent edges conflict
    for (int v = 0; v < g.num_vertices(); ++v)
        for (size_t i = 0; i < g.out[v].size(); ++i)
            for (size_t j = i + 1; j < g.out[v].size(); ++j) {
                int a = DartGraph::edge_of(g.out[v][i]);
                int b = DartGraph::edge_of(g.out[v][j]);
                if (a != b) {
                    conf[a].insert(b);
                    conf[b].insert(a);
                }
            }
    // edges joined by an edge conflict
    for (int e = 0; e < n; ++e) {
        auto [u, v] = g.ends[e];
        for (int du : g.out[u])
            for (int dv : g.out[v]) {
                int a = DartGraph::edge_of(du);
                int b = DartGraph::edge_of(dv);
                if (a != b && a != e && b != e) {
                    conf[a].insert(b);
                    conf[b].insert(a);
                }
            }
    }
    std::vector<std::vector<int>> out(n);
    for (int e = 0; e < n; ++e) out[e] = {conf[e].begin(), conf[e].end()};
    return out;
}

namespace {

constexpr int kMaxPalette = 64;

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Max clique of the conflict graph seen through closed edge neighborhoods:
// all edges touching an endpoint of e are pairwise in conflict.
std::vector<int> edge_neighborhood_clique(const DartGraph& g) {
    std::vector<int> best;
    for (int e = 0; e < g.num_edges(); ++e) {
        std::set<int> cl;
        cl.insert(e);
        for (int side : {g.ends[e].first, g.ends[e].second})
            for (int d : g.out[side]) cl.insert(DartGraph::edge_of(d));
        if (cl.size() > best.size()) best.assign(cl.begin(), cl.end());
    }
    return best;
}

struct Solver {
    const std::vector<std::vector<int>>& conf;
    int n;
    int t;
    const SearchBudget& budget;
    Clock clock;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    std::vector<int> color;                   // 0 = unassigned
    std::vector<std::vector<std::uint8_t>> cnt;  // cnt[v][c-1]: conflicting uses
    std::vector<std::uint64_t> mask;          // colors blocked at v
    int uncolored = 0;

    Solver(const std::vector<std::vector<int>>& conf_, int t_, const SearchBudget& b)
        : conf(conf_), n(static_cast<int>(conf_.size())), t(t_), budget(b) {
        color.assign(n, 0);
        cnt.assign(n, std::vector<std::uint8_t>(t, 0));
        mask.assign(n, 0);
        uncolored = n;
    }

    void assign(int v, int c) {
        color[v] = c;
        --uncolored;
        for (int w : conf[v]) {
            if (++cnt[w][c - 1] == 1) mask[w] |= (1ull << (c - 1));
        }
    }

    void unassign(int v, int c) {
        color[v] = 0;
        ++uncolored;
        for (int w : conf[v]) {
            if (--cnt[w][c - 1] == 0) mask[w] &= ~(1ull << (c - 1));
        }
    }

    bool over_budget() {
        if (out_of_budget) return true;
        if (nodes > budget.max_nodes || ((nodes & 0xfff) == 0 && clock.elapsed() > budget.max_seconds)) {
            out_of_budget = true;
        }
        return out_of_budget;
    }

    // DSATUR pick: max saturation, then max conflict degree, then min index.
    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int sat = std::popcount(mask[v]);
            int deg = static_cast<int>(conf[v].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool search(int max_used) {
        if (uncolored == 0) return true;
        ++nodes;
        if (over_budget()) return false;
        int v = pick();
        int cap = std::min(t, max_used + 1);
        std::uint64_t avail = ~mask[v] & ((cap >= 64) ? ~0ull : ((1ull << cap) - 1));
        while (avail) {
            int c = std::countr_zero(avail) + 1;
            avail &= avail - 1;
            assign(v, c);
            if (search(std::max(max_used, c))) return true;
            unassign(v, c);
            if (out_of_budget) return false;
        }
        return false;
    }
};

// Greedy DSATUR coloring; always succeeds, used for the initial upper bound.
EdgeColoring greedy_coloring(const std::vector<std::vector<int>>& conf) {
    int n = static_cast<int>(conf.size());
    EdgeColoring c;
    c.colors.assign(n, 0);
    std::vector<std::set<int>> neighbor_colors(n);
    int maxc = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (c.colors[v]) continue;
            int sat = static_cast<int>(neighbor_colors[v].size());
            int deg = static_cast<int>(conf[v].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int col = 1;
        while (neighbor_colors[best].count(col)) ++col;
        c.colors[best] = col;
        maxc = std::max(maxc, col);
        for (int w : conf[best]) neighbor_colors[w].insert(col);
    }
    c.palette = maxc;
    return c;
}

struct DecideOutcome {
    bool decided = false;
    bool sat = false;
    std::vector<int> colors;
    std::uint64_t nodes = 0;
};

// Decision with symmetry breaking: the clique is pre-colored 1..q.
DecideOutcome decide(const std::vector<std::vector<int>>& conf, const std::vector<int>& clique,
                     int t, const SearchBudget& budget) {
    DecideOutcome out;
    if (t > kMaxPalette) throw std::invalid_argument("palette above 64 is not supported by the solver");
    if (static_cast<int>(clique.size()) > t) {
        out.decided = true;
        out.sat = false;
        return out;
    }
    Solver s(conf, t, budget);
    int q = 0;
    for (int e : clique) s.assign(e, ++q);
    bool sat = s.search(q);
    out.nodes = s.nodes;
    if (s.out_of_budget) return out;
    out.decided = true;
    out.sat = sat;
    if (sat) out.colors = s.color;
    return out;
}

void reject_loops(const DartGraph& g, const char* who) {
    if (g.has_loop()) throw std::invalid_argument(std::string(who) + ": loop present");
}

}  // namespace

SolveResult chi_strong(const DartGraph& g, std::optional<int> lower_hint,
                       std::optional<int> upper_hint, const SearchBudget& budget) {
    reject_loops(g, "chi_strong");
    SolveResult res;
    if (g.num_edges() == 0) {
        res.chi_strong = 0;
        res.witness.palette = 0;
        res.proof_state = ProofState::optimal;
        res.lower_bound = 0;
        return res;
    }
    auto conf = strong_conflict_graph(g);
    auto clique = edge_neighborhood_clique(g);
    int lb = std::max<int>(static_cast<int>(clique.size()), lower_hint.value_or(1));
    EdgeColoring best = greedy_coloring(conf);
    int ub = best.palette;
    if (upper_hint && *upper_hint < ub && *upper_hint >= lb) {
        // try the hinted palette first; a hit improves the starting upper bound
        auto out = decide(conf, clique, *upper_hint, budget);
        res.nodes_explored += out.nodes;
        if (out.decided && out.sat) {
            best.colors = out.colors;
            best.palette = ub = *upper_hint;
        }
    }
    for (int t = lb; t < ub; ++t) {
        auto out = decide(conf, clique, t, budget);
        res.nodes_explored += out.nodes;
        if (!out.decided) {
            res.chi_strong = ub;
            res.witness = best;
            res.lower_bound = t;
            res.proof_state = ProofState::upper_bound_only;
            return res;
        }
        if (out.sat) {
            best.colors = out.colors;
            best.palette = t;
            ub = t;
            break;
        }
    }
    res.chi_strong = ub;
    res.witness = best;
    res.witness.palette = ub;
    res.lower_bound = ub;
    res.proof_state = ProofState::optimal;
    return res;
}

DecisionResult has_strong_coloring(const DartGraph& g, int t, const SearchBudget& budget) {
    reject_loops(g, "has_strong_coloring");
    if (t < 0) throw std::invalid_argument("has_strong_coloring: negative palette");
    DecisionResult res;
    if (g.num_edges() == 0) {
        res.decided = true;
        res.exists = true;
        res.witness.palette = t;
        return res;
    }
    auto conf = strong_conflict_graph(g);
    if (t >= g.num_edges()) {
        // all edges distinctly colored is always strong
        res.decided = true;
        res.exists = true;
        res.witness.palette = t;
        res.witness.colors.resize(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e) res.witness.colors[e] = e + 1;
        return res;
    }
    auto clique = edge_neighborhood_clique(g);
    auto out = decide(conf, clique, t, budget);
    res.nodes_explored = out.nodes;
    if (!out.decided) return res;
    res.decided = true;
    res.exists = out.sat;
    if (out.sat) {
        res.witness.palette = t;
        res.witness.colors = out.colors;
    }
    return res;
}

std::vector<EdgeColoring> enumerate_strong(const DartGraph& g, int t, std::uint64_t cap) {
    reject_loops(g, "enumerate_strong");
    if (t > kMaxPalette) throw std::invalid_argument("enumerate_strong: palette above 64");
    auto conf = strong_conflict_graph(g);
    int n = g.num_edges();
    std::vector<EdgeColoring> out;
    std::vector<int> color(n, 0);
    std::vector<std::vector<std::uint8_t>> cnt(n, std::vector<std::uint8_t>(std::max(t, 1), 0));
    std::vector<std::uint64_t> mask(n, 0);
    std::uint64_t full = (t >= 64) ? ~0ull : ((1ull << t) - 1);
    auto rec = [&](auto&& self, int e) -> void {
        if (e == n) {
            if (out.size() >= cap) throw std::runtime_error("enumerate_strong: cap exceeded");
            EdgeColoring c;
            c.palette = t;
            c.colors = color;
            out.push_back(std::move(c));
            return;
        }
        std::uint64_t avail = ~mask[e] & full;
        while (avail) {
            int c = std::countr_zero(avail) + 1;
            avail &= avail - 1;
            color[e] = c;
            for (int w : conf[e])
                if (++cnt[w][c - 1] == 1) mask[w] |= (1ull << (c - 1));
            self(self, e + 1);
            for (int w : conf[e])
                if (--cnt[w][c - 1] == 0) mask[w] &= ~(1ull << (c - 1));
            color[e] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

EdgeColoring lift_coloring(const CoveringMap& f, const EdgeColoring& phi) {
    auto check = verify_cover(f);
    if (!check.ok) throw std::invalid_argument("lift_coloring: not a covering projection: " + check.reason);
    if (!is_strong(f.target, phi))
        throw std::invalid_argument("lift_coloring: base coloring is not strong");
    EdgeColoring lifted;
    lifted.palette = phi.palette;
    lifted.colors.resize(f.source.num_edges());
    for (int e = 0; e < f.source.num_edges(); ++e)
        lifted.colors[e] = phi.colors[DartGraph::edge_of(f.dart_map[2 * e])];
    return lifted;
}

}  // namespace oddcover

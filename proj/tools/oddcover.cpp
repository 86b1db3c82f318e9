#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "oddcover/cover.hpp"
#include "oddcover/kneser.hpp"
#include "oddcover/named_graphs.hpp"
#include "oddcover/petersen.hpp"
#include "oddcover/strong.hpp"
#include "oddcover/voltage.hpp"

using json = nlohmann::json;
using namespace oddcover;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kParseError = 2;
constexpr int kTimeout = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DartGraph load_graph(const std::string& path) {
    std::string text = slurp(path);
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw std::invalid_argument("empty graph input");
    if (text[i] == '{') return parse_graph_json(text);
    size_t j = text.find_first_of("\r\n", i);
    return parse_graph6(text.substr(i, j == std::string::npos ? j : j - i));
}

void emit(const json& payload) { std::cout << payload.dump() << "\n"; }

const char* proof_state_name(ProofState s) {
    switch (s) {
        case ProofState::optimal: return "optimal";
        case ProofState::upper_bound_only: return "upper_bound_only";
        default: return "timeout";
    }
}

json coloring_json(const DartGraph& g, const EdgeColoring& c) {
    return json::parse(write_coloring_json(g, c));
}

json graph_json(const DartGraph& g) { return json::parse(write_graph_json(g)); }

json voltage_json(const VoltageAssignment& v) { return json::parse(write_voltage_json(v)); }

json cover_json(const CoveringMap& f) { return json::parse(write_cover_json(f)); }

int cmd_chi_strong(const std::string& graph_path, double budget_s) {
    DartGraph g = load_graph(graph_path);
    SearchBudget budget;
    if (budget_s > 0) budget.max_seconds = budget_s;
    SolveResult res = chi_strong(g, {}, {}, budget);
    json out = {{"chi_strong", res.chi_strong},
                {"proof_state", proof_state_name(res.proof_state)},
                {"lower_bound", res.lower_bound},
                {"nodes_explored", res.nodes_explored},
                {"coloring", coloring_json(g, res.witness)}};
    emit(out);
    return res.proof_state == ProofState::optimal ? kOk : kTimeout;
}

int cmd_has_strong(const std::string& graph_path, int t, double budget_s) {
    DartGraph g = load_graph(graph_path);
    SearchBudget budget;
    if (budget_s > 0) budget.max_seconds = budget_s;
    DecisionResult res = has_strong_coloring(g, t, budget);
    if (!res.decided) {
        emit({{"exists", nullptr}, {"nodes_explored", res.nodes_explored}});
        return kTimeout;
    }
    json out = {{"exists", res.exists}, {"nodes_explored", res.nodes_explored}};
    if (res.exists) out["coloring"] = coloring_json(g, res.witness);
    emit(out);
    return res.exists ? kOk : kViolated;
}

int cmd_enumerate(const std::string& graph_path, int t, std::uint64_t cap) {
    DartGraph g = load_graph(graph_path);
    auto all = enumerate_strong(g, t, cap);
    json list = json::array();
    for (const auto& c : all) list.push_back(coloring_json(g, c));
    emit({{"count", all.size()}, {"colorings", list}});
    return all.empty() ? kViolated : kOk;
}

int cmd_verify_strong(const std::string& graph_path, const std::string& coloring_path) {
    DartGraph g = load_graph(graph_path);
    EdgeColoring c = parse_coloring_json(g, slurp(coloring_path));
    bool ok = is_strong(g, c);
    emit({{"strong", ok}});
    return ok ? kOk : kViolated;
}

int cmd_verify_normal(const std::string& graph_path, const std::string& coloring_path) {
    DartGraph g = load_graph(graph_path);
    EdgeColoring c = parse_coloring_json(g, slurp(coloring_path));
    bool ok = is_normal(g, c);
    json classes = json::object();
    if (is_proper(g, c)) {
        for (int e = 0; e < g.num_edges(); ++e) {
            EdgeClass cl = edge_class(g, c, e);
            classes[g.edge_ids[e]] =
                cl == EdgeClass::rich ? "rich" : (cl == EdgeClass::poor ? "poor" : "neither");
        }
    }
    emit({{"normal", ok}, {"classes", classes}});
    return ok ? kOk : kViolated;
}

int cmd_cover_from_coloring(const std::string& graph_path, const std::string& coloring_path,
                            int k) {
    DartGraph g = load_graph(graph_path);
    EdgeColoring c = parse_coloring_json(g, slurp(coloring_path));
    CoveringMap f = cover_from_strong_coloring(g, c, k);
    emit(cover_json(f));
    return kOk;
}

int cmd_verify_cover(const std::string& cover_path) {
    CoveringMap f = parse_cover_json(slurp(cover_path));
    CoverCheck check = verify_cover(f);
    json out = {{"ok", check.ok}};
    if (check.ok) out["fold"] = fold_count(f);
    else out["reason"] = check.reason;
    emit(out);
    return check.ok ? kOk : kViolated;
}

int cmd_lift_coloring(const std::string& cover_path, const std::string& coloring_path) {
    CoveringMap f = parse_cover_json(slurp(cover_path));
    EdgeColoring c = parse_coloring_json(f.target, slurp(coloring_path));
    emit(coloring_json(f.source, lift_coloring(f, c)));
    return kOk;
}

int cmd_lift_voltage(const std::string& graph_path, const std::string& voltage_path) {
    DartGraph g = load_graph(graph_path);
    VoltageAssignment v = parse_voltage_json(g, slurp(voltage_path));
    DerivedGraph lift = derived_lift(v);
    json out = cover_json(lift.projection);
    out["connected"] = is_connected(lift.lift);
    emit(out);
    return kOk;
}

int cmd_reduce_voltage(const std::string& graph_path, const std::string& voltage_path,
                       const std::string& root) {
    DartGraph g = load_graph(graph_path);
    VoltageAssignment v = parse_voltage_json(g, slurp(voltage_path));
    int r = g.vertex_index(root);
    emit(voltage_json(t_reduction(v, spanning_tree(g, r), r)));
    return kOk;
}

int cmd_cover_equiv(const std::string& graph_path, const std::string& volt_a,
                    const std::string& volt_b, const std::string& root) {
    DartGraph g = load_graph(graph_path);
    VoltageAssignment a = parse_voltage_json(g, slurp(volt_a));
    VoltageAssignment b = parse_voltage_json(g, slurp(volt_b));
    int r = g.vertex_index(root);
    auto w = covers_equivalent_voltage(a, b, spanning_tree(g, r), r);
    json out = {{"equivalent", w.has_value()}};
    if (w) out["conjugator"] = perm_to_images(*w);
    emit(out);
    return w ? kOk : kViolated;
}

int cmd_coloring_equiv(const std::string& graph_path, const std::string& col_a,
                       const std::string& col_b) {
    DartGraph g = load_graph(graph_path);
    EdgeColoring a = parse_coloring_json(g, slurp(col_a));
    EdgeColoring b = parse_coloring_json(g, slurp(col_b));
    auto alpha = colorings_equivalent(g, a, b);
    json out = {{"equivalent", alpha.has_value()}};
    if (alpha) {
        json m = json::object();
        for (int v = 0; v < g.num_vertices(); ++v)
            m[g.vertex_ids[v]] = g.vertex_ids[(*alpha)[v]];
        out["automorphism"] = m;
    }
    emit(out);
    return alpha ? kOk : kViolated;
}

int cmd_girth_double(const std::string& graph_path) {
    DartGraph g = load_graph(graph_path);
    DerivedGraph lift = girth_double(g);
    json out = cover_json(lift.projection);
    out["girth_base"] = girth(g);
    out["girth_lift"] = girth(lift.lift);
    emit(out);
    return kOk;
}

int cmd_counterexample(int n) {
    CounterexampleGraph cg = counterexample_family(n);
    json out = graph_json(cg.graph);
    out["girth"] = cg.girth_value;
    out["bipartite"] = cg.bipartite;
    out["connected"] = cg.connected;
    if (n <= 2) {
        SolveResult res = chi_strong(cg.graph);
        out["chi_strong"] = res.chi_strong;
        out["certificate"] = {{"method", "exact_solver"},
                              {"proof_state", proof_state_name(res.proof_state)}};
    } else {
        // upper bound by lifting an optimal coloring of the previous member,
        // lower bound from the mod-10 order obstruction against a strong
        // 5-coloring (which would make the graph a Petersen cover)
        CounterexampleGraph prev = counterexample_family(n - 1);
        DerivedGraph step = girth_double(prev.graph);
        SolveResult base = chi_strong(prev.graph);
        EdgeColoring up = lift_coloring(step.projection, base.witness);
        bool upper_ok = is_strong(cg.graph, up) && up.palette == 6;
        bool lower_ok = cg.graph.num_vertices() % 10 != 0;
        if (!upper_ok || !lower_ok)
            throw std::logic_error("counterexample: certification failed");
        out["chi_strong"] = 6;
        out["certificate"] = {{"method", "lift_and_mod10"},
                              {"upper_bound", 6},
                              {"lower_bound", 6},
                              {"order_mod_10", cg.graph.num_vertices() % 10}};
    }
    emit(out);
    return kOk;
}

int cmd_find_nonequiv_pair(double budget_s) {
    NonequivPair pair = find_nonequivalent_pair(4, budget_s);
    json out = {{"status", pair.status}};
    if (pair.found) {
        out["kappa"] = voltage_json(pair.kappa);
        out["lambda"] = voltage_json(pair.lambda);
        out["lift_isomorphism"] = pair.lift_isomorphism;
    }
    emit(out);
    if (pair.found) return kOk;
    return pair.status == "exhausted" ? kViolated : kTimeout;
}

int cmd_petersen_report(const std::string& graph_path, double budget_s) {
    DartGraph g = load_graph(graph_path);
    SearchBudget budget;
    if (budget_s > 0) budget.max_seconds = budget_s;
    EquivalenceReport rep = equivalence_report(g, budget);
    json out = {{"conclusive", rep.conclusive},
                {"chi_strong_is_5", rep.chi_strong_is_5},
                {"covers_petersen", rep.covers_petersen},
                {"normal_all_rich", rep.normal_all_rich},
                {"petersen_homomorphism", rep.petersen_homomorphism}};
    if (rep.strong_witness) out["strong_coloring"] = coloring_json(g, *rep.strong_witness);
    if (rep.cover_witness) out["cover"] = cover_json(*rep.cover_witness);
    if (rep.petersen_witness)
        out["petersen_coloring"] =
            json::parse(write_petersen_coloring_json(g, odd_graph(3), *rep.petersen_witness));
    emit(out);
    return rep.conclusive ? kOk : kTimeout;
}

int cmd_export_dot(const std::string& graph_path, const std::string& coloring_path) {
    DartGraph g = load_graph(graph_path);
    if (coloring_path.empty()) {
        std::cout << write_dot(g);
    } else {
        EdgeColoring c = parse_coloring_json(g, slurp(coloring_path));
        std::cout << write_dot(g, &c);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong edge colorings, covering projections, and voltage lifts"};
    app.require_subcommand(1);

    int m = 0, n = 0, k = 0, t = 0;
    std::uint64_t cap = 100000;
    double budget_s = 0;
    std::string graph_path, second_path, third_path, root = "";
    bool deterministic = false;

    auto* kneser = app.add_subcommand("kneser", "Kneser graph K(m,n) as graph JSON");
    kneser->add_option("--m", m)->required();
    kneser->add_option("--n", n)->required();

    auto* odd = app.add_subcommand("odd", "odd graph O_k as graph JSON");
    odd->add_option("--k", k)->required();

    auto* chi = app.add_subcommand("chi-strong", "exact strong chromatic index");
    chi->add_option("graph", graph_path)->required();
    chi->add_option("--budget-s", budget_s);
    chi->add_flag("--deterministic", deterministic);

    auto* has = app.add_subcommand("has-strong", "decide a strong t-coloring");
    has->add_option("graph", graph_path)->required();
    has->add_option("--t", t)->required();
    has->add_option("--budget-s", budget_s);

    auto* enumerate = app.add_subcommand("enumerate-strong", "all strong t-colorings");
    enumerate->add_option("graph", graph_path)->required();
    enumerate->add_option("--t", t)->required();
    enumerate->add_option("--cap", cap);

    auto* vstrong = app.add_subcommand("verify-strong", "check a strong coloring");
    vstrong->add_option("graph", graph_path)->required();
    vstrong->add_option("coloring", second_path)->required();

    auto* vnormal = app.add_subcommand("verify-normal", "check a normal coloring");
    vnormal->add_option("graph", graph_path)->required();
    vnormal->add_option("coloring", second_path)->required();

    auto* cfc = app.add_subcommand("cover-from-coloring", "cover of K(2k-1,k-1) from a coloring");
    cfc->add_option("graph", graph_path)->required();
    cfc->add_option("coloring", second_path)->required();
    cfc->add_option("--k", k)->required();

    auto* vcover = app.add_subcommand("verify-cover", "check a covering projection");
    vcover->add_option("cover", graph_path)->required();

    auto* lcol = app.add_subcommand("lift-coloring", "pull a coloring back through a cover");
    lcol->add_option("cover", graph_path)->required();
    lcol->add_option("coloring", second_path)->required();

    auto* lvolt = app.add_subcommand("lift-voltage", "derived lift of a voltage assignment");
    lvolt->add_option("graph", graph_path)->required();
    lvolt->add_option("voltages", second_path)->required();

    auto* rvolt = app.add_subcommand("reduce-voltage", "(T,r)-reduction");
    rvolt->add_option("graph", graph_path)->required();
    rvolt->add_option("voltages", second_path)->required();
    rvolt->add_option("--root", root)->required();

    auto* cequiv = app.add_subcommand("cover-equiv", "equivalence of voltage covers");
    cequiv->add_option("graph", graph_path)->required();
    cequiv->add_option("voltA", second_path)->required();
    cequiv->add_option("voltB", third_path)->required();
    cequiv->add_option("--root", root)->required();

    auto* colequiv = app.add_subcommand("coloring-equiv", "equivalence of edge colorings");
    colequiv->add_option("graph", graph_path)->required();
    colequiv->add_option("colA", second_path)->required();
    colequiv->add_option("colB", third_path)->required();

    auto* gd = app.add_subcommand("girth-double", "homology cover with doubled girth");
    gd->add_option("graph", graph_path)->required();

    auto* cex = app.add_subcommand("counterexample", "member of the girth-doubling family");
    cex->add_option("--n", n)->required();

    auto* fnp = app.add_subcommand("find-nonequiv-pair", "inequivalent covers with equal lifts");
    fnp->add_option("--budget-s", budget_s);

    auto* prep = app.add_subcommand("petersen-report", "four-way equivalence report");
    prep->add_option("graph", graph_path)->required();
    prep->add_option("--budget-s", budget_s);

    auto* dot = app.add_subcommand("export-dot", "DOT output, optionally colored");
    dot->add_option("graph", graph_path)->required();
    dot->add_option("coloring", second_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(kneser)) {
            emit(json::parse(write_graph_json(kneser_graph(m, n))));
            return kOk;
        }
        if (app.got_subcommand(odd)) {
            emit(json::parse(write_graph_json(odd_graph(k))));
            return kOk;
        }
        if (app.got_subcommand(chi)) return cmd_chi_strong(graph_path, budget_s);
        if (app.got_subcommand(has)) return cmd_has_strong(graph_path, t, budget_s);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(graph_path, t, cap);
        if (app.got_subcommand(vstrong)) return cmd_verify_strong(graph_path, second_path);
        if (app.got_subcommand(vnormal)) return cmd_verify_normal(graph_path, second_path);
        if (app.got_subcommand(cfc)) return cmd_cover_from_coloring(graph_path, second_path, k);
        if (app.got_subcommand(vcover)) return cmd_verify_cover(graph_path);
        if (app.got_subcommand(lcol)) return cmd_lift_coloring(graph_path, second_path);
        if (app.got_subcommand(lvolt)) return cmd_lift_voltage(graph_path, second_path);
        if (app.got_subcommand(rvolt)) return cmd_reduce_voltage(graph_path, second_path, root);
        if (app.got_subcommand(cequiv))
            return cmd_cover_equiv(graph_path, second_path, third_path, root);
        if (app.got_subcommand(colequiv))
            return cmd_coloring_equiv(graph_path, second_path, third_path);
        if (app.got_subcommand(gd)) return cmd_girth_double(graph_path);
        if (app.got_subcommand(cex)) return cmd_counterexample(n);
        if (app.got_subcommand(fnp))
            return cmd_find_nonequiv_pair(budget_s > 0 ? budget_s : 1800.0);
        if (app.got_subcommand(prep)) return cmd_petersen_report(graph_path, budget_s);
        if (app.got_subcommand(dot)) return cmd_export_dot(graph_path, second_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kTimeout;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kParseError;
    }
    return kParseError;
}

#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "oddcover/kneser.hpp"
#include "oddcover/named_graphs.hpp"
#include "oddcover/voltage.hpp"
#include "test_util.hpp"

using namespace oddcover;

TEST_CASE("perm basics") {
    Perm id = Perm::identity(4);
    CHECK(id.is_identity());
    CHECK(cycle_type(id) == std::vector<int>{1, 1, 1, 1});

    Perm p = perm_from_images({2, 1, 3});  // (1 2)
    Perm q = perm_from_images({3, 2, 1});  // (1 3)
    // (1)(p*q) = ((1)p)q = (2)q = 2
    CHECK(perm_compose(p, q).apply(0) == 1);
    CHECK(perm_compose(q, p).apply(0) == 2);
    CHECK(perm_compose(p, perm_inverse(p)).is_identity());
    CHECK(is_involution(p));
    CHECK_FALSE(is_involution(perm_from_images({2, 3, 1})));
    CHECK(cycle_type(p) == std::vector<int>{1, 2});
    CHECK(cycle_type(perm_from_images({2, 1, 4, 3})) == std::vector<int>{2, 2});

    CHECK(perm_to_images(p) == std::vector<int>{2, 1, 3});
    CHECK_THROWS_AS(perm_from_images({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(perm_from_images({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("voltage assignment involution rule") {
    DartGraph theta = theta_graph();
    VoltageAssignment v = trivial_assignment(theta, 3);
    Perm c3 = perm_from_images({2, 3, 1});
    v.set_edge_voltage(1, c3);
    CHECK(v.voltages[2] == c3);
    CHECK(v.voltages[3] == perm_inverse(c3));
}

TEST_CASE("derived_lift") {
    // pentagonal voltages on the dumbbell produce the Petersen graph
    VoltageAssignment v = trivial_assignment(dumbbell_graph(), 5);
    v.set_edge_voltage(1, perm_from_images({2, 3, 4, 5, 1}));
    v.set_edge_voltage(2, perm_from_images({3, 4, 5, 1, 2}));
    DerivedGraph lift = derived_lift(v);
    CHECK(lift.lift.num_vertices() == 10);
    CHECK(lift.lift.num_edges() == 15);
    CHECK(is_isomorphic(lift.lift, odd_graph(3)).has_value());
    CHECK(lift.lift.vertex_ids[0] == "u@1");
    CHECK(verify_cover(lift.projection).ok);

    // a loop with trivial voltage lifts to d loops
    DartGraph one_loop = build_graph({"u"}, {{"u", "u"}});
    DerivedGraph loops = derived_lift(trivial_assignment(one_loop, 3));
    CHECK(loops.lift.num_edges() == 3);
    for (int e = 0; e < 3; ++e) CHECK(loops.lift.is_loop(e));
}

TEST_CASE("t_reduction by hand") {
    // triangle rooted at a: tree = {ab, ac}, chord bc carries z
    DartGraph tri = build_graph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    SpanningTree tree = spanning_tree(tri, 0);
    REQUIRE(tree.tree_edge == std::vector<char>{1, 1, 0});

    VoltageAssignment v = trivial_assignment(tri, 3);
    v.set_edge_voltage(0, perm_from_images({2, 3, 1}));  // g = (1 2 3)
    v.set_edge_voltage(1, perm_from_images({2, 1, 3}));  // h = (1 2)
    v.set_edge_voltage(2, perm_from_images({1, 3, 2}));  // z = (2 3)

    VoltageAssignment red = t_reduction(v, tree, 0);
    CHECK(red.voltages[0].is_identity());
    CHECK(red.voltages[2].is_identity());
    // theta(b->c) = T(b) z T(c)^-1 = g z h^-1 = (1 3 2) by hand
    CHECK(perm_to_images(red.voltages[4]) == std::vector<int>{3, 1, 2});
    CHECK(red.voltages[5] == perm_inverse(red.voltages[4]));

    // with z = (1 2 3) instead: theta(b->c) = (1 3)
    v.set_edge_voltage(2, perm_from_images({2, 3, 1}));
    red = t_reduction(v, tree, 0);
    CHECK(perm_to_images(red.voltages[4]) == std::vector<int>{3, 2, 1});
}

TEST_CASE("t_reduction preserves the cover") {
    std::mt19937 rng(83);
    for (int i = 0; i < 15; ++i) {
        DartGraph base = testutil::random_connected_graph(rng, 6);
        std::uniform_int_distribution<int> dd(2, 4);
        VoltageAssignment kappa = testutil::random_assignment(rng, base, dd(rng));
        SpanningTree tree = spanning_tree(base, 0);
        VoltageAssignment red = t_reduction(kappa, tree, 0);
        for (int e = 0; e < base.num_edges(); ++e)
            if (tree.tree_edge[e]) CHECK(red.voltages[2 * e].is_identity());
        auto xi = covers_equivalent_direct(derived_lift(kappa).projection,
                                           derived_lift(red).projection);
        CHECK(xi.has_value());
    }
}

TEST_CASE("is_transitive") {
    CHECK_FALSE(is_transitive({Perm::identity(2)}, 2));
    CHECK(is_transitive({perm_from_images({2, 1})}, 2));
    CHECK_FALSE(is_transitive({perm_from_images({2, 1, 3, 4}), perm_from_images({1, 2, 4, 3})}, 4));
    CHECK(is_transitive({perm_from_images({2, 1, 3, 4}), perm_from_images({2, 3, 4, 1})}, 4));
}

TEST_CASE("lift_connected agrees with the lift") {
    std::mt19937 rng(89);
    for (int i = 0; i < 30; ++i) {
        DartGraph base = testutil::random_connected_graph(rng, 6);
        std::uniform_int_distribution<int> dd(1, 4);
        VoltageAssignment kappa = testutil::random_assignment(rng, base, dd(rng));
        CHECK(lift_connected(kappa) == is_connected(derived_lift(kappa).lift));
    }
}

TEST_CASE("covers_equivalent_voltage finds conjugators") {
    std::mt19937 rng(97);
    DartGraph pet = odd_graph(3);
    SpanningTree tree = spanning_tree(pet, 0);
    for (int i = 0; i < 10; ++i) {
        VoltageAssignment kappa = testutil::random_assignment(rng, pet, 4);
        Perm g = testutil::random_perm(rng, 4);
        VoltageAssignment lambda = kappa;
        for (int e = 0; e < pet.num_edges(); ++e)
            lambda.set_edge_voltage(
                e, perm_compose(perm_compose(g, kappa.voltages[2 * e]), perm_inverse(g)));
        auto w = covers_equivalent_voltage(kappa, lambda, tree, 0);
        REQUIRE(w.has_value());
        VoltageAssignment rk = t_reduction(kappa, tree, 0);
        VoltageAssignment rl = t_reduction(lambda, tree, 0);
        for (int x = 0; x < pet.num_darts(); ++x) {
            if (tree.tree_edge[DartGraph::edge_of(x)]) continue;
            CHECK(rl.voltages[x] ==
                  perm_compose(perm_compose(*w, rk.voltages[x]), perm_inverse(*w)));
        }
    }

    // different cycle structures on the cotree can never be conjugate
    DartGraph c4 = cycle_graph(4);
    SpanningTree t4 = spanning_tree(c4, 0);
    VoltageAssignment a = trivial_assignment(c4, 2);
    VoltageAssignment b = trivial_assignment(c4, 2);
    b.set_edge_voltage(3, perm_from_images({2, 1}));
    CHECK_FALSE(covers_equivalent_voltage(a, b, t4, 0).has_value());
}

TEST_CASE("homology_voltage") {
    DartGraph theta = theta_graph();
    SpanningTree tree = spanning_tree(theta, 0);
    BinaryVoltage bv = homology_voltage(theta, tree);
    CHECK(bv.beta == 2);
    std::multiset<std::uint32_t> bits(bv.edge_bits.begin(), bv.edge_bits.end());
    CHECK(bits == std::multiset<std::uint32_t>{0, 1, 2});

    VoltageAssignment pv = binary_to_permutation(bv);
    CHECK(pv.d == 4);
    for (int e = 0; e < 3; ++e) {
        CHECK(is_involution(pv.voltages[2 * e]));
        // XOR action: bit b sends i to i^b
        for (int i = 0; i < 4; ++i)
            CHECK(pv.voltages[2 * e].apply(i) == (i ^ static_cast<int>(bv.edge_bits[e])));
    }
}

TEST_CASE("girth_double") {
    DerivedGraph g2 = girth_double(theta_graph());
    CHECK(is_isomorphic(g2.lift, cube_graph()).has_value());
    CHECK(girth(g2.lift) == 4);
    CHECK(verify_cover(g2.projection).ok);
    CHECK(fold_count(g2.projection) == 4);

    DerivedGraph c6 = girth_double(cycle_graph(3));
    CHECK(is_isomorphic(c6.lift, cycle_graph(6)).has_value());

    DerivedGraph c8 = girth_double(cycle_graph(4));
    CHECK(is_isomorphic(c8.lift, cycle_graph(8)).has_value());

    CHECK_THROWS_AS(girth_double(path_graph(3)), std::invalid_argument);  // infinite girth
    CHECK_THROWS_AS(girth_double(build_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})),
                    std::invalid_argument);
}

TEST_CASE("counterexample_family") {
    CounterexampleGraph g1 = counterexample_family(1);
    CHECK(g1.graph.same_graph(theta_graph()));
    CHECK(g1.girth_value == 2);
    CHECK(g1.bipartite);
    CHECK(g1.connected);

    CounterexampleGraph g2 = counterexample_family(2);
    CHECK(is_isomorphic(g2.graph, cube_graph()).has_value());
    CHECK(g2.girth_value == 4);

    CHECK_THROWS_AS(counterexample_family(0), std::invalid_argument);
    CHECK_THROWS_AS(counterexample_family(4), std::invalid_argument);
}

TEST_CASE("voltage json round trips") {
    std::mt19937 rng(101);
    DartGraph base = testutil::random_connected_graph(rng, 6);
    VoltageAssignment v = testutil::random_assignment(rng, base, 4);
    VoltageAssignment back = parse_voltage_json(base, write_voltage_json(v));
    CHECK(back.d == 4);
    CHECK(back.voltages == v.voltages);
    CHECK_THROWS_AS(parse_voltage_json(base, "{\"d\": 4}"), std::invalid_argument);

    SpanningTree tree = spanning_tree(base, 0);
    BinaryVoltage bv = homology_voltage(base, tree);
    BinaryVoltage bb = parse_binary_voltage_json(base, write_binary_voltage_json(bv));
    CHECK(bb.beta == bv.beta);
    CHECK(bb.edge_bits == bv.edge_bits);
}

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "oddcover/kneser.hpp"
#include "oddcover/named_graphs.hpp"
#include "oddcover/strong.hpp"

using namespace oddcover;

TEST_CASE("kneser graph generation") {
    DartGraph k52 = kneser_graph(5, 2);
    CHECK(k52.num_vertices() == 10);
    CHECK(k52.num_edges() == 15);
    CHECK(k52.is_regular(3));

    DartGraph k73 = kneser_graph(7, 3);
    CHECK(k73.num_vertices() == 35);
    CHECK(k73.num_edges() == 70);
    CHECK(k73.is_regular(4));

    CHECK_THROWS_AS(kneser_graph(4, 2), std::invalid_argument);

    // n = 1 convenience: complete graphs
    DartGraph k5 = kneser_graph(5, 1);
    CHECK(k5.num_vertices() == 5);
    CHECK(k5.num_edges() == 10);

    // lexicographic vertex order
    CHECK(k52.vertex_ids[0] == "1-2");
    CHECK(k52.vertex_ids[9] == "4-5");
}

TEST_CASE("odd graphs") {
    DartGraph o3 = odd_graph(3);
    CHECK(is_isomorphic(o3, kneser_graph(5, 2)).has_value());
    CHECK(girth(o3) == 5);
    CHECK(odd_graph(4).num_vertices() == 35);
    CHECK_THROWS_AS(odd_graph(2), std::invalid_argument);
}

TEST_CASE("canonical coloring") {
    DartGraph o3 = odd_graph(3);
    EdgeColoring s3 = canonical_coloring(3);
    CHECK(s3.palette == 5);
    // edge {1,2}-{3,4} carries color 5
    int u = o3.vertex_index("1-2"), v = o3.vertex_index("3-4");
    for (int e = 0; e < o3.num_edges(); ++e) {
        auto p = std::minmax(o3.ends[e].first, o3.ends[e].second);
        if (p == std::minmax(u, v)) CHECK(s3.colors[e] == 5);
    }
    CHECK(is_strong(o3, s3));
    std::set<int> used(s3.colors.begin(), s3.colors.end());
    CHECK(used.size() == 5);

    EdgeColoring s4 = canonical_coloring(4);
    CHECK(s4.palette == 7);
    CHECK(is_strong(odd_graph(4), s4));
    std::set<int> used4(s4.colors.begin(), s4.colors.end());
    CHECK(used4.size() == 7);
}

TEST_CASE("derived vertex coloring is the vertex label") {
    DartGraph o3 = odd_graph(3);
    EdgeColoring s3 = canonical_coloring(3);
    DerivedVertexColoring dvc = derived_vertex_coloring(o3, s3, 3);
    for (int v = 0; v < o3.num_vertices(); ++v) CHECK(dvc.assignment[v].id() == o3.vertex_ids[v]);
}

TEST_CASE("derived vertex coloring under a color permutation") {
    DartGraph o3 = odd_graph(3);
    EdgeColoring s3 = canonical_coloring(3);
    // rho = (1 2 3 4 5) cyclic shift
    auto rho = [](int c) { return c % 5 + 1; };
    EdgeColoring t = s3;
    for (int& c : t.colors) c = rho(c);
    DerivedVertexColoring dvc = derived_vertex_coloring(o3, t, 3);
    for (int v = 0; v < o3.num_vertices(); ++v) {
        KneserVertex expect = parse_kneser_vertex(o3.vertex_ids[v], 5);
        for (int& x : expect.subset) x = rho(x);
        std::sort(expect.subset.begin(), expect.subset.end());
        CHECK(dvc.assignment[v] == expect);
    }
}

TEST_CASE("derived vertex coloring rejections") {
    DartGraph q3 = cube_graph();
    EdgeColoring six;
    six.palette = 6;
    six.colors.assign(12, 1);
    CHECK_THROWS_AS(derived_vertex_coloring(q3, six, 3), std::invalid_argument);

    DartGraph o3 = odd_graph(3);
    EdgeColoring bad;
    bad.palette = 5;
    bad.colors.assign(15, 1);  // repeated colors at vertices
    CHECK_THROWS_AS(derived_vertex_coloring(o3, bad, 3), std::invalid_argument);
}

TEST_CASE("reconstruct coloring") {
    DartGraph o3 = odd_graph(3);
    EdgeColoring s3 = canonical_coloring(3);
    CHECK(reconstruct_coloring(o3, derived_vertex_coloring(o3, s3, 3)) == s3);

    // one edge by hand
    DartGraph edge = build_graph({"u", "v"}, {{"u", "v"}});
    DerivedVertexColoring dvc;
    dvc.k = 3;
    dvc.assignment = {KneserVertex{5, {1, 2}}, KneserVertex{5, {3, 4}}};
    CHECK(reconstruct_coloring(edge, dvc).colors[0] == 5);

    dvc.assignment = {KneserVertex{5, {1, 2}}, KneserVertex{5, {2, 3}}};
    CHECK_THROWS_AS(reconstruct_coloring(edge, dvc), std::invalid_argument);
}

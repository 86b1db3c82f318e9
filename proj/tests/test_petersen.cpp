#include <doctest.h>

#include <stdexcept>

#include <set>

#include "oddcover/kneser.hpp"
#include "oddcover/named_graphs.hpp"
#include "oddcover/petersen.hpp"
#include "oddcover/voltage.hpp"
#include "test_util.hpp"

using namespace oddcover;

namespace {

PetersenColoring identity_on_petersen() {
    PetersenColoring xi;
    for (int e = 0; e < 15; ++e) xi.edge_map.push_back(e);
    return xi;
}

EdgeColoring k4_normal() {
    EdgeColoring c;
    c.palette = 5;
    c.colors = {1, 2, 3, 3, 2, 1};  // proper 3-edge-coloring, every edge poor
    return c;
}

}  // namespace

TEST_CASE("is_petersen_coloring and is_homomorphism") {
    DartGraph pet = odd_graph(3);
    PetersenColoring id = identity_on_petersen();
    CHECK(is_petersen_coloring(pet, id));
    CHECK(is_homomorphism(pet, id));

    PetersenColoring bad = id;
    bad.edge_map[0] = id.edge_map[1];
    CHECK_FALSE(is_petersen_coloring(pet, bad));

    CHECK_THROWS_AS(is_petersen_coloring(cycle_graph(5), id), std::invalid_argument);
}

TEST_CASE("normal_to_petersen on all-rich input") {
    DartGraph pet = odd_graph(3);
    EdgeColoring s3 = canonical_coloring(3);
    PetersenColoring xi = normal_to_petersen(pet, s3);
    CHECK(is_petersen_coloring(pet, xi));
    CHECK(is_homomorphism(pet, xi));
    CHECK(strong5_from_petersen_hom(pet, xi) == s3);
}

TEST_CASE("normal_to_petersen on K4 is not a homomorphism") {
    DartGraph k4 = complete_graph(4);
    EdgeColoring phi = k4_normal();
    PetersenColoring xi = normal_to_petersen(k4, phi);
    CHECK(is_petersen_coloring(k4, xi));
    CHECK_FALSE(is_homomorphism(k4, xi));
    CHECK_THROWS_AS(strong5_from_petersen_hom(k4, xi), std::invalid_argument);
    CHECK_THROWS_AS(cover_from_petersen_hom(k4, xi), std::invalid_argument);

    // non-normal input is rejected
    DartGraph q3 = cube_graph();
    EdgeColoring six;
    six.palette = 5;
    six.colors = {1, 2, 3, 2, 4, 1, 5, 3, 4, 5, 1, 2};
    CHECK_THROWS_AS(normal_to_petersen(q3, six), std::invalid_argument);
}

TEST_CASE("cover_from_petersen_hom and petersen_from_cover round trip") {
    DartGraph pet = odd_graph(3);
    PetersenColoring id = identity_on_petersen();
    CoveringMap f = cover_from_petersen_hom(pet, id);
    CHECK(verify_cover(f).ok);
    CHECK(fold_count(f) == 1);
    CHECK(petersen_from_cover(f).edge_map == id.edge_map);

    // connected voltage lifts of the Petersen graph give homomorphic colorings
    VoltageAssignment kappa = trivial_assignment(pet, 3);
    kappa.set_edge_voltage(14, perm_from_images({2, 3, 1}));
    DerivedGraph lifted = derived_lift(kappa);
    REQUIRE(is_connected(lifted.lift));
    PetersenColoring xi = petersen_from_cover(lifted.projection);
    CHECK(is_petersen_coloring(lifted.lift, xi));
    CHECK(is_homomorphism(lifted.lift, xi));
    CoveringMap back = cover_from_petersen_hom(lifted.lift, xi);
    CHECK(verify_cover(back).ok);
    CHECK(fold_count(back) == 3);
}

TEST_CASE("equivalence_report") {
    EquivalenceReport pet = equivalence_report(odd_graph(3));
    CHECK(pet.conclusive);
    CHECK(pet.chi_strong_is_5);
    CHECK(pet.covers_petersen);
    CHECK(pet.normal_all_rich);
    CHECK(pet.petersen_homomorphism);
    REQUIRE(pet.strong_witness.has_value());
    CHECK(is_strong(odd_graph(3), *pet.strong_witness));
    REQUIRE(pet.cover_witness.has_value());
    CHECK(verify_cover(*pet.cover_witness).ok);
    REQUIRE(pet.petersen_witness.has_value());
    CHECK(is_homomorphism(odd_graph(3), *pet.petersen_witness));

    EquivalenceReport q3 = equivalence_report(cube_graph());
    CHECK(q3.conclusive);
    CHECK_FALSE(q3.chi_strong_is_5);
    CHECK_FALSE(q3.covers_petersen);
    CHECK_FALSE(q3.normal_all_rich);
    CHECK_FALSE(q3.petersen_homomorphism);

    EquivalenceReport k4 = equivalence_report(complete_graph(4));
    CHECK(k4.conclusive);
    CHECK_FALSE(k4.chi_strong_is_5);
    CHECK_FALSE(k4.covers_petersen);
    CHECK_FALSE(k4.normal_all_rich);
    CHECK_FALSE(k4.petersen_homomorphism);

    CHECK_THROWS_AS(equivalence_report(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("petersen coloring json round trip") {
    DartGraph pet = odd_graph(3);
    PetersenColoring id = identity_on_petersen();
    std::string text = write_petersen_coloring_json(pet, pet, id);
    PetersenColoring back = parse_petersen_coloring_json(pet, pet, text);
    CHECK(back.edge_map == id.edge_map);
    CHECK_THROWS_AS(parse_petersen_coloring_json(pet, pet, "{\"edges\": 1}"),
                    std::invalid_argument);
}

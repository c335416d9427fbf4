#include <doctest.h>

#include <random>

#include "test_helpers.hpp"

using namespace klab;
using namespace klab::testing;

namespace {

Scheme from_fixture(const std::string& name) {
    InputDocument doc = parse_input_file(std::string(KLAB_FIXTURE_DIR) + "/" + name);
    return build_scheme(doc, BuildOptions{});
}

} // namespace

TEST_CASE("single rational point") {
    FieldSpec q{0};
    ComponentInput ci;
    ci.point = std::vector<Scalar>{Scalar::one(q), Scalar::zero(q), Scalar::zero(q)};
    Scheme scheme = Scheme::from_components(q, 2, {ci}, BuildOptions{});
    CHECK(scheme.degree() == 1);
    RingPtr proj = scheme.proj_ring();
    CHECK(scheme.ideal().groebner_basis() ==
          std::vector<Polynomial>{pp("X2", proj), pp("X1", proj)});
    CHECK(scheme.hilbert().r_x == 0);
    CHECK(scheme.hilbert().prefix(2) == std::vector<int>{1, 1, 1});
    CHECK(scheme.generic_position());
    CHECK(scheme.is_reduced());
}

TEST_CASE("raw non-reduced complete intersection") {
    Scheme scheme = from_fixture("ci_nonreduced_p2.json");
    CHECK(scheme.degree() == 6);
    CHECK(scheme.hilbert().prefix(4) == std::vector<int>{1, 3, 5, 6, 6});
    CHECK(scheme.hilbert().r_x == 3);
    CHECK(scheme.hilbert().alpha_x == 2);
    CHECK(!scheme.generic_position());
    CHECK(!scheme.is_reduced());
    CHECK(scheme.residue_dimension() == 2);  // two reduced points underneath
}

TEST_CASE("four-component build") {
    Scheme scheme = from_fixture("four_component_ci_p2.json");
    CHECK(scheme.degree() == 9);
    REQUIRE(scheme.components().size() == 4);
    std::vector<int> mult, kappa;
    for (const auto& c : scheme.components()) {
        mult.push_back(c.local.multiplicity);
        kappa.push_back(c.local.kappa);
    }
    CHECK(mult == std::vector<int>{1, 1, 2, 5});
    CHECK(kappa == std::vector<int>{1, 1, 1, 5});
    CHECK(scheme.hilbert().prefix(5) == std::vector<int>{1, 3, 6, 8, 9, 9});
    CHECK(scheme.hilbert().r_x == 4);
}

TEST_CASE("Hilbert tables of the reference schemes") {
    Scheme cubics = from_fixture("two_cubics_p2.json");
    CHECK(cubics.hilbert().prefix(5) == std::vector<int>{1, 3, 6, 8, 9, 9});
    CHECK(cubics.hilbert().r_x == 4);

    Scheme principal = from_fixture("principal_noether_p2.json");
    CHECK(principal.hilbert().prefix(4) == std::vector<int>{1, 3, 4, 5, 5});
    CHECK(principal.hilbert().r_x == 3);
}

TEST_CASE("generic position checks") {
    Scheme ags = from_fixture("ags_equal_lengths_p3.json");
    CHECK(ags.degree() == 5);
    CHECK(ags.hilbert().prefix(3) == std::vector<int>{1, 4, 5, 5});
    CHECK(ags.generic_position());
    CHECK(ags.hilbert().alpha_x == 2);
    CHECK(ags.hilbert().r_x == 2);
    CHECK(ags.generic_boundary() == Scheme::GenericBoundary::StrictlyBetween);

    CHECK(!from_fixture("ci_nonreduced_p2.json").generic_position());
}

TEST_CASE("local rings") {
    Scheme ags = from_fixture("ags_equal_lengths_p3.json");
    const LocalRing& reduced_point = ags.local_ring(0);
    CHECK(reduced_point.multiplicity == 1);
    CHECK(reduced_point.kappa == 1);
    CHECK(reduced_point.socle.dimension() == 1);
    CHECK(reduced_point.gorenstein);

    const LocalRing& fat_point = ags.local_ring(3);
    CHECK(fat_point.multiplicity == 2);
    CHECK(fat_point.kappa == 1);
    CHECK(fat_point.socle.dimension() == 1);
    CHECK(fat_point.gorenstein);
    CHECK(!fat_point.reduced);

    Scheme twocubics = from_fixture("four_component_ci_p2.json");
    const LocalRing& quintic = twocubics.local_ring(3);
    CHECK(quintic.multiplicity == 5);
    CHECK(quintic.kappa == 5);
    CHECK(quintic.reduced);
    CHECK(quintic.gorenstein);
}

TEST_CASE("multiplication by x0 is injective on graded pieces") {
    Scheme scheme = from_fixture("two_cubics_p2.json");
    const GradedCoordinates& graded = scheme.graded();
    RingPtr proj = scheme.proj_ring();
    Polynomial x0 = pp("X0", proj);
    for (int i = 0; i <= scheme.hilbert().r_x + 1; ++i) {
        EchelonSpan image(scheme.field());
        for (const auto& m : graded.std_monomials(i))
            image.insert(graded.product_coords(x0, m, i + 1));
        CHECK(static_cast<int>(image.dimension()) == scheme.hilbert().value(i));
    }
}

TEST_CASE("degree equals the sum of the local multiplicities") {
    std::mt19937_64 rng(47);
    for (int k = 0; k < 5; ++k) {
        Scheme scheme = random_point_scheme(2, 3 + static_cast<int>(rng() % 4), FieldSpec{0}, rng);
        int total = 0;
        for (const auto& c : scheme.components()) total += c.local.multiplicity;
        CHECK(total == scheme.degree());
        CHECK(scheme.is_reduced());
    }
}

TEST_CASE("validation errors") {
    FieldSpec q{0};
    RingPtr proj = Ring::projective(2, q);

    // a point on the hyperplane X0 = 0
    ComponentInput at_infinity;
    at_infinity.point = std::vector<Scalar>{Scalar::zero(q), Scalar::one(q), Scalar::zero(q)};
    CHECK_THROWS_WITH_AS(Scheme::from_components(q, 2, {at_infinity}, BuildOptions{}),
                         doctest::Contains("X0"), Error);

    // duplicate supports
    ComponentInput origin;
    origin.point = std::vector<Scalar>{Scalar::one(q), Scalar::zero(q), Scalar::zero(q)};
    ComponentInput fat_origin;
    fat_origin.primary_gens = {"X1^2", "X2"};
    CHECK_THROWS_AS(Scheme::from_components(q, 2, {origin, fat_origin}, BuildOptions{}), Error);

    // positive-dimensional input
    CHECK_THROWS_AS(Scheme::from_ideal(q, 2, {pp("X1", proj)}, BuildOptions{}), Error);

    // inhomogeneous raw ideal
    CHECK_THROWS_AS(Scheme::from_ideal(q, 2, {pp("X1^2 + X1", proj)}, BuildOptions{}), Error);

    // characteristic guard: degree 6 over F5
    RingPtr proj5 = Ring::projective(2, FieldSpec{5});
    CHECK_THROWS_AS(Scheme::from_ideal(FieldSpec{5}, 2,
                                       {pp("X1^2", proj5), pp("X2^3", proj5)}, BuildOptions{}),
                    Error);
    // but a large enough prime works
    RingPtr proj7 = Ring::projective(2, FieldSpec{7});
    Scheme ok = Scheme::from_ideal(FieldSpec{7}, 2, {pp("X1^2", proj7), pp("X2^3", proj7)},
                                   BuildOptions{});
    CHECK(ok.degree() == 6);
}

TEST_CASE("saturation warning on raw input") {
    FieldSpec q{0};
    RingPtr proj = Ring::projective(1, q);
    Scheme scheme = Scheme::from_ideal(q, 1, {pp("X0*X1", proj)}, BuildOptions{});
    CHECK(scheme.degree() == 1);
    REQUIRE(scheme.warnings().size() == 1);
    CHECK(scheme.ideal().groebner_basis() == std::vector<Polynomial>{pp("X1", proj)});
}

TEST_CASE("non-rational support keeps global invariants only") {
    Scheme scheme = from_fixture("principal_noether_p2.json");
    CHECK(!scheme.has_components());
    CHECK_THROWS_AS(scheme.local_ring(0), Error);
    CHECK(scheme.residue_dimension() == 3);  // kappa = 1 at the fat point, 2 at the pair
    CHECK(!scheme.is_reduced());
}

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

struct Analysis {
    Scheme scheme;
    GradedIdealView kaehler, noether;
    GradedEmbedding embedding;
    ConductorProfile profile;

    explicit Analysis(Scheme s)
        : scheme(std::move(s)),
          kaehler(kaehler_different(scheme)),
          noether(noether_different(scheme)),
          embedding(scheme),
          profile(conductor(embedding)) {}

    ClassificationReport classify_all(bool cross = false) const {
        return classify(scheme, kaehler, noether, embedding, profile, cross);
    }
};

} // namespace

TEST_CASE("embedding frame dimensions") {
    FieldSpec q{0};
    ComponentInput single;
    single.point = std::vector<Scalar>{Scalar::one(q), Scalar::from_int(2, q), Scalar::zero(q)};
    Scheme one_point = Scheme::from_components(q, 2, {single}, BuildOptions{});
    GradedEmbedding emb(one_point);
    CHECK(emb.image(0).dimension() == 1);

    Scheme ags = from_fixture("ags_equal_lengths_p3.json");
    GradedEmbedding frame(ags);
    CHECK(frame.image(0).dimension() == 1);
    CHECK(frame.image(1).dimension() == 4);
    CHECK(frame.image(2).dimension() == 5);
    CHECK(static_cast<int>(frame.image(frame.r_x()).dimension()) == ags.degree());
}

TEST_CASE("mu values") {
    std::mt19937_64 rng(61);
    Scheme pts = random_generic_points(2, 4, FieldSpec{0}, rng);
    GradedEmbedding emb(pts);
    // unit elements of a CB point set sit exactly at the regularity index
    GradedIdealView kaehler = kaehler_different(pts);
    ConductorProfile profile = conductor(emb);
    CbResult cb = cb_test(emb, profile);
    if (cb.is_cb) {
        for (std::size_t j = 0; j < pts.components().size(); ++j) {
            Vec one{Scalar::one(pts.field())};
            CHECK(mu_value(emb, j, one) == pts.hilbert().r_x);
        }
    }
    // mu never exceeds the regularity index
    for (int k = 0; k < 100; ++k) {
        std::size_t j = rng() % pts.components().size();
        Vec a{random_scalar(rng, pts.field())};
        if (a[0].is_zero()) continue;
        CHECK(mu_value(emb, j, a) <= pts.hilbert().r_x);
    }
    CHECK_THROWS_AS(mu_value(emb, 0, Vec{Scalar::zero(pts.field())}), Error);
}

TEST_CASE("separators of the fattened configurations") {
    Scheme y = from_fixture("ags_unequal_lengths_p3.json");
    GradedEmbedding emb(y);
    // the third point has the degree-one separator X2 - X3
    SeparatorSet p3 = separators(emb, 2);
    REQUIRE(p3.minimal.size() == 1);
    CHECK(p3.degrees[0] == 1);
    CHECK(proportional(p3.minimal[0], pp("X2 - X3", y.proj_ring())));
    // the fat point still separates in degree two
    SeparatorSet p4 = separators(emb, 3);
    REQUIRE(p4.minimal.size() == 1);
    CHECK(p4.degrees[0] == 2);

    Scheme x = from_fixture("ags_equal_lengths_p3.json");
    GradedEmbedding embx(x);
    for (std::size_t j = 0; j < x.components().size(); ++j) {
        SeparatorSet sep = separators(embx, j);
        for (int d : sep.degrees) CHECK(d == 2);
    }
}

TEST_CASE("separators on a projective line") {
    FieldSpec q{0};
    ComponentInput a, b;
    a.point = std::vector<Scalar>{Scalar::one(q), Scalar::zero(q)};
    b.point = std::vector<Scalar>{Scalar::one(q), Scalar::one(q)};
    Scheme scheme = Scheme::from_components(q, 1, {a, b}, BuildOptions{});
    GradedEmbedding emb(scheme);
    for (std::size_t j = 0; j < 2; ++j) {
        SeparatorSet sep = separators(emb, j);
        REQUIRE(sep.degrees.size() == 1);
        CHECK(sep.degrees[0] == 1);
    }
}

TEST_CASE("separator reconstruction of high-degree elements") {
    std::mt19937_64 rng(67);
    Scheme pts = random_point_scheme(2, 5, FieldSpec{0}, rng);
    GradedEmbedding emb(pts);
    int r = pts.hilbert().r_x;
    std::vector<Polynomial> fulls;
    for (std::size_t j = 0; j < pts.components().size(); ++j)
        fulls.push_back(separators(emb, j).full[0]);
    RingPtr proj = pts.proj_ring();
    Polynomial x0 = pp("X0", proj);
    for (int i = r; i <= r + 1; ++i) {
        for (int trial = 0; trial < 5; ++trial) {
            Vec coords;
            for (int c = 0; c < pts.graded().hf(i); ++c)
                coords.push_back(random_scalar(rng, pts.field()));
            Polynomial g = pts.graded().from_coords(coords, i);
            Polynomial sum = Polynomial::zero(proj);
            for (std::size_t j = 0; j < fulls.size(); ++j) {
                Scalar value = g.evaluate(*pts.components()[j].coords);
                Polynomial term = fulls[j].scaled(value);
                for (int k = r; k < i; ++k) term = term * x0;
                sum = sum + term;
            }
            CHECK(pts.ideal().normal_form(g - sum).is_zero());
        }
    }
}

TEST_CASE("conductor lengths of the two fattenings") {
    Analysis x(from_fixture("ags_equal_lengths_p3.json"));
    CHECK(x.profile.len_tilde_over_r == 5);
    CHECK(x.profile.len_r_over_f == 5);
    CHECK(x.profile.point_degrees == std::vector<int>{2, 2, 2, 2});
    CHECK(cb_test(x.embedding, x.profile).is_cb);

    Analysis y(from_fixture("ags_unequal_lengths_p3.json"));
    CHECK(y.profile.len_tilde_over_f == 9);
    CHECK(y.profile.len_tilde_over_r == 5);
    CHECK(y.profile.len_r_over_f == 4);
    CHECK(y.profile.point_degrees == std::vector<int>{2, 2, 1, 2});
    CHECK(!cb_test(y.embedding, y.profile).is_cb);
    CHECK(y.profile.len_tilde_over_f == y.profile.len_tilde_over_r + y.profile.len_r_over_f);
}

TEST_CASE("CB schemes have vanishing conductor below the regularity index") {
    Scheme four = from_fixture("four_component_ci_p2.json");
    GradedEmbedding emb(four);
    ConductorProfile profile = conductor(emb);
    for (int i = 0; i < four.hilbert().r_x; ++i) CHECK(profile.dims[i] == 0);
    CbResult cb = cb_test(emb, profile);
    CHECK(cb.is_cb);
    CHECK(cb.point_degrees == std::vector<int>{4, 4, 4, 4});
}

TEST_CASE("conductor pieces are nested ideals") {
    std::mt19937_64 rng(71);
    Scheme pts = random_point_scheme(2, 5, FieldSpec{0}, rng);
    GradedEmbedding emb(pts);
    ConductorProfile profile = conductor(emb);
    for (std::size_t i = 0; i + 1 < profile.bases.size(); ++i) {
        EchelonSpan next(pts.field());
        for (const auto& v : profile.bases[i + 1]) next.insert(v);
        for (const auto& v : profile.bases[i]) CHECK(next.contains(v));
        // each piece is closed under multiplication by S
        EchelonSpan self(pts.field());
        for (const auto& v : profile.bases[i]) self.insert(v);
        for (const auto& v : profile.bases[i])
            for (int b = 0; b < pts.degree(); ++b)
                CHECK(self.contains(pts.algebra().basis_mult(b).apply(v)));
    }
}

TEST_CASE("rank criterion preconditions") {
    std::mt19937_64 rng(73);
    // three generic points have r_X = 1, violating the hypotheses
    Scheme three = random_generic_points(2, 3, FieldSpec{0}, rng);
    CHECK_THROWS_AS(cb_rank_criterion(three), Error);
    // t < n: five generic points in the plane have t = 1
    Scheme five = random_generic_points(2, 5, FieldSpec{0}, rng);
    CHECK_THROWS_AS(cb_rank_criterion(five), Error);
}

TEST_CASE("rank criterion agrees with the conductor test") {
    std::mt19937_64 rng(79);
    for (int s : {4, 7}) {
        Scheme pts = random_generic_points(2, s, FieldSpec{0}, rng);
        if (pts.hilbert().r_x != pts.hilbert().alpha_x || pts.hilbert().r_x < 2) continue;
        CbRankCriterion rank = cb_rank_criterion(pts);
        GradedEmbedding emb(pts);
        CbResult cb = cb_test(emb, conductor(emb));
        CHECK(rank.sufficient_cb == cb.is_cb);
    }
}

TEST_CASE("generic position equivalences") {
    std::mt19937_64 rng(83);
    // six generic plane points hit the binomial bound
    for (int k = 0; k < 3; ++k) {
        Scheme pts = random_generic_points(2, 6, FieldSpec{0}, rng);
        if (pts.generic_boundary() != Scheme::GenericBoundary::AtBinomialBound) continue;
        Analysis a(pts);
        GenPosEquivalence eq = genpos_equivalence_check(a.scheme, a.kaehler, a.embedding, a.profile);
        CHECK(eq.generic_at_bound);
        CHECK(eq.kaehler_tail_form);
        CHECK(eq.cb_and_conductor_power);
        CHECK(eq.consistent);
    }
    // a 2x2 grid misses the bound coherently
    RingPtr proj = Ring::projective(2, FieldSpec{0});
    Scheme grid = Scheme::from_ideal(
        FieldSpec{0}, 2,
        {pp("X1^2 - X0*X1", proj), pp("X2^2 - X0*X2", proj)}, BuildOptions{});
    CHECK(grid.degree() == 4);
    Analysis g(grid);
    GenPosEquivalence eq = genpos_equivalence_check(g.scheme, g.kaehler, g.embedding, g.profile);
    CHECK(!eq.generic_at_bound);
    CHECK(!eq.kaehler_tail_form);
    CHECK(eq.consistent);

    // a single point is vacuously consistent
    FieldSpec q{0};
    ComponentInput single;
    single.point = std::vector<Scalar>{Scalar::one(q), Scalar::zero(q), Scalar::zero(q)};
    Analysis s(Scheme::from_components(q, 2, {single}, BuildOptions{}));
    GenPosEquivalence eqs = genpos_equivalence_check(s.scheme, s.kaehler, s.embedding, s.profile);
    CHECK(eqs.consistent);
}

TEST_CASE("classification of the reference schemes") {
    Analysis four(from_fixture("four_component_ci_p2.json"));
    ClassificationReport rep = four.classify_all(true);
    CHECK(rep.is_ci);
    CHECK(rep.is_cb);
    CHECK(rep.is_locally_gorenstein);
    CHECK(rep.is_arith_gorenstein);
    CHECK(rep.ci_witness_hf_kaehler_rx == 1);
    CHECK(rep.consistency_failures.empty());

    Analysis principal(from_fixture("principal_noether_p2.json"));
    ClassificationReport repp = principal.classify_all();
    CHECK(principal.noether.principal());
    CHECK(!repp.is_arith_gorenstein);
    CHECK(principal.noether.value(principal.scheme.hilbert().r_x) == 0);
    CHECK(!repp.is_ci);
    CHECK(repp.consistency_failures.empty());

    Analysis gor(from_fixture("gorenstein_p3.json"));
    ClassificationReport repg = gor.classify_all();
    CHECK(repg.is_arith_gorenstein);
    CHECK(repg.ag_routes.at("cb_locally_gorenstein_noether_rx"));
    CHECK(gor.noether.value(2) == 1);
    CHECK(!repg.is_ci);  // no linear forms, so no CI of degree five in P^3
    CHECK(repg.consistency_failures.empty());
}

TEST_CASE("classification is exercised by both fattenings") {
    Analysis x(from_fixture("ags_equal_lengths_p3.json"));
    ClassificationReport repx = x.classify_all(true);
    CHECK(repx.is_generic);
    CHECK(repx.is_cb);
    CHECK(repx.is_arith_gorenstein);
    CHECK(repx.len_tilde_over_r == repx.len_r_over_f);
    CHECK(repx.consistency_failures.empty());

    Analysis y(from_fixture("ags_unequal_lengths_p3.json"));
    ClassificationReport repy = y.classify_all(true);
    CHECK(repy.is_generic);
    CHECK(!repy.is_cb);
    CHECK(!repy.is_arith_gorenstein);
    CHECK(repy.len_tilde_over_r == 5);
    CHECK(repy.len_r_over_f == 4);
    CHECK(repy.consistency_failures.empty());
}

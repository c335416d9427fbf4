#include "klab/structure.hpp"

#include <algorithm>

#include "klab/log.hpp"

namespace klab {

// ---------------------------------------------------------------------------
// GradedEmbedding

GradedEmbedding::GradedEmbedding(const Scheme& scheme) : scheme_(&scheme) {
    int deg = scheme.degree();
    FieldSpec f = scheme.field();
    for (int i = 0; i <= r_x(); ++i) {
        const auto& stds = scheme.graded().std_monomials(i);
        Matrix m(deg, stds.size(), f);
        EchelonSpan span(f);
        for (std::size_t c = 0; c < stds.size(); ++c) {
            // drop the X0 exponent: the dehomogenization of a monomial
            std::vector<std::uint32_t> e(stds[c].exponents().begin() + 1,
                                         stds[c].exponents().end());
            Vec col = scheme.algebra().monomial_coords(Monomial(std::move(e)));
            for (int r = 0; r < deg; ++r) m.at(r, c) = col[r];
            span.insert(std::move(col));
        }
        if (static_cast<int>(span.dimension()) != scheme.hilbert().value(i))
            fail("internal", "embedding image dimension disagrees with the Hilbert function");
        matrices_.push_back(std::move(m));
        images_.push_back(std::move(span));
    }
    if (static_cast<int>(images_.back().dimension()) != deg)
        fail("internal", "embedding does not become an isomorphism at the regularity index");
}

const Matrix& GradedEmbedding::matrix(int i) const {
    if (i < 0 || i > r_x()) fail("internal", "embedding matrix degree out of range");
    return matrices_[i];
}

const EchelonSpan& GradedEmbedding::image(int i) const {
    if (i < 0) fail("internal", "embedding image of negative degree");
    return images_[std::min(i, r_x())];
}

bool GradedEmbedding::image_contains(const Vec& s_coords, int i) const {
    if (i >= r_x()) return true;
    return images_[i].contains(s_coords);
}

int GradedEmbedding::min_degree_containing(const Vec& s_coords) const {
    for (int i = 0; i <= r_x(); ++i)
        if (images_[i].contains(s_coords)) return i;
    fail("internal", "vector escapes V_{r_X} = S");
}

Polynomial GradedEmbedding::preimage(const Vec& s_coords, int i) const {
    auto sol = matrix(i).solve(s_coords);
    if (!sol.has_value()) fail("internal", "preimage requested outside the image");
    return scheme_->graded().from_coords(*sol, i);
}

// ---------------------------------------------------------------------------
// mu values and separators

int mu_value(const GradedEmbedding& embedding, std::size_t j, const Vec& local_element) {
    bool nonzero = false;
    for (const auto& c : local_element)
        if (!c.is_zero()) nonzero = true;
    if (!nonzero) fail("zero_element", "mu of the zero element");
    const Scheme& scheme = embedding.scheme();
    std::vector<Vec> blocks;
    for (std::size_t k = 0; k < scheme.components().size(); ++k) {
        const auto& local = scheme.components()[k].local;
        if (k == j)
            blocks.push_back(local_element);
        else
            blocks.push_back(Vec(local.multiplicity, Scalar::zero(scheme.field())));
    }
    return embedding.min_degree_containing(scheme.embed(blocks));
}

SeparatorSet separators(const GradedEmbedding& embedding, std::size_t j) {
    const Scheme& scheme = embedding.scheme();
    const LocalRing& local = scheme.local_ring(j);
    if (!local.gorenstein)
        fail("unsupported",
             "separators at a non-Gorenstein component are not unique; unsupported");
    Vec socle = local.socle_generator();
    SeparatorSet out;
    Polynomial x0 = Polynomial::variable(scheme.proj_ring(), 0);
    for (const auto& e : local.residue_basis()) {
        Vec a = local.algebra.multiply(e, socle);
        std::vector<Vec> blocks;
        for (std::size_t k = 0; k < scheme.components().size(); ++k) {
            const auto& lk = scheme.components()[k].local;
            blocks.push_back(k == j ? a : Vec(lk.multiplicity, Scalar::zero(scheme.field())));
        }
        Vec embedded = scheme.embed(blocks);
        int mu = embedding.min_degree_containing(embedded);
        Polynomial minimal = embedding.preimage(embedded, mu);
        Polynomial full = minimal;
        for (int k = mu; k < embedding.r_x(); ++k) full = full * x0;
        out.minimal.push_back(std::move(minimal));
        out.degrees.push_back(mu);
        out.full.push_back(std::move(full));
    }
    return out;
}

// ---------------------------------------------------------------------------
// conductor

ConductorProfile conductor(const GradedEmbedding& embedding) {
    const Scheme& scheme = embedding.scheme();
    FieldSpec f = scheme.field();
    int deg = scheme.degree();
    int r = embedding.r_x();
    ConductorProfile profile;

    for (int i = 0; i <= r; ++i) {
        if (i == r) {
            // F_{r_X} = S
            std::vector<Vec> basis;
            for (int c = 0; c < deg; ++c) {
                Vec v(deg, Scalar::zero(f));
                v[c] = Scalar::one(f);
                basis.push_back(std::move(v));
            }
            profile.dims.push_back(deg);
            profile.bases.push_back(std::move(basis));
            break;
        }
        // linear conditions: for every basis element b, v*b reduced against
        // V_i must vanish on the non-pivot coordinates
        const EchelonSpan& v_i = embedding.image(i);
        std::vector<bool> pivot(deg, false);
        for (std::size_t c : v_i.pivots()) pivot[c] = true;
        Matrix conditions(0, deg, f);
        for (int b = 0; b < deg; ++b) {
            const Matrix& mult = scheme.algebra().basis_mult(b);
            // residual functionals applied to mult * v
            for (int c = 0; c < deg; ++c) {
                if (pivot[c]) continue;
                Vec row(deg, Scalar::zero(f));
                for (int w = 0; w < deg; ++w) {
                    Scalar value = mult.at(c, w);
                    for (std::size_t rr = 0; rr < v_i.rows().size(); ++rr) {
                        const Scalar& coeff = v_i.rows()[rr][c];
                        if (!coeff.is_zero())
                            value -= coeff * mult.at(v_i.pivots()[rr], w);
                    }
                    row[w] = std::move(value);
                }
                conditions.append_row(row);
            }
        }
        std::vector<Vec> kernel = conditions.kernel_basis();
        EchelonSpan span(f);
        for (auto& v : kernel) span.insert(std::move(v));
        profile.dims.push_back(static_cast<int>(span.dimension()));
        profile.bases.push_back(span.rows());
    }

    const HilbertTable& hf = scheme.hilbert();
    for (int i = 0; i < r; ++i) {
        profile.len_tilde_over_r += deg - hf.value(i);
        profile.len_r_over_f += hf.value(i) - profile.dims[i];
        profile.len_tilde_over_f += deg - profile.dims[i];
    }

    if (scheme.has_components()) {
        profile.point_degrees.assign(scheme.components().size(), -1);
        for (int i = 0; i <= r; ++i) {
            for (std::size_t j = 0; j < scheme.components().size(); ++j) {
                if (profile.point_degrees[j] >= 0) continue;
                for (const auto& v : profile.bases[i]) {
                    Vec proj = scheme.project(j, v);
                    bool nonzero = false;
                    for (const auto& c : proj)
                        if (!c.is_zero()) nonzero = true;
                    if (nonzero) {
                        profile.point_degrees[j] = i;
                        break;
                    }
                }
            }
        }
        for (int d : profile.point_degrees)
            if (d < 0) fail("internal", "conductor misses a component");
    }
    return profile;
}

CbResult cb_test(const GradedEmbedding& embedding, const ConductorProfile& profile) {
    CbResult result;
    result.is_cb = true;
    for (int i = 0; i < embedding.r_x(); ++i)
        if (profile.dims[i] != 0) result.is_cb = false;
    result.point_degrees = profile.point_degrees;
    return result;
}

// ---------------------------------------------------------------------------
// rank criterion

CbRankCriterion cb_rank_criterion(const Scheme& scheme) {
    if (!scheme.is_reduced())
        fail("hypothesis_violation", "rank criterion needs a reduced scheme");
    if (!scheme.has_components())
        fail("hypothesis_violation", "rank criterion needs rational point components");
    for (const auto& comp : scheme.components())
        if (!comp.coords.has_value() || comp.local.multiplicity != 1)
            fail("hypothesis_violation", "rank criterion needs K-rational points");
    if (!scheme.generic_position())
        fail("hypothesis_violation", "rank criterion needs generic position");
    const HilbertTable& hf = scheme.hilbert();
    int n = scheme.n();
    int alpha = hf.alpha_x;
    if (hf.r_x != alpha || hf.r_x < 2)
        fail("hypothesis_violation", "rank criterion needs r_X = alpha_X >= 2");
    long long t = binomial(n + alpha, n) - scheme.degree();
    if (t < n) fail("hypothesis_violation", "rank criterion needs t >= n minimal generators");

    // basis of (I_X)_alpha as the kernel of the coordinate map P_alpha -> R_alpha
    std::vector<Monomial> monos = monomials_of_degree(scheme.proj_ring(), alpha);
    Matrix coords(scheme.graded().hf(alpha), monos.size(), scheme.field());
    for (std::size_t c = 0; c < monos.size(); ++c) {
        const Vec& v = scheme.graded().monomial_coords(monos[c]);
        for (std::size_t r = 0; r < v.size(); ++r) coords.at(r, c) = v[r];
    }
    std::vector<Vec> kernel = coords.kernel_basis();
    if (static_cast<long long>(kernel.size()) != t)
        fail("internal", "degree-alpha piece has unexpected dimension");
    std::vector<Polynomial> forms;
    for (const auto& v : kernel) {
        std::vector<Term> ts;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero()) ts.push_back({monos[c], v[c]});
        forms.push_back(Polynomial::from_terms(scheme.proj_ring(), std::move(ts)));
    }

    std::vector<Polynomial> minors = jacobian_minors(forms);
    CbRankCriterion out;
    out.t = static_cast<int>(t);
    out.delta = static_cast<int>(minors.size());

    std::size_t s = scheme.components().size();
    Matrix eval(s, minors.size(), scheme.field());
    for (std::size_t j = 0; j < s; ++j) {
        const auto& point = *scheme.components()[j].coords;
        for (std::size_t i = 0; i < minors.size(); ++i) eval.at(j, i) = minors[i].evaluate(point);
    }
    out.rank_plain = eval.rank();
    out.sufficient_cb = true;
    for (std::size_t j = 0; j < s; ++j) {
        Matrix augmented(s, minors.size() + 1, scheme.field());
        for (std::size_t r = 0; r < s; ++r)
            for (std::size_t c = 0; c < minors.size(); ++c) augmented.at(r, c) = eval.at(r, c);
        augmented.at(j, minors.size()) = Scalar::one(scheme.field());
        std::size_t rank = augmented.rank();
        out.rank_augmented.push_back(rank);
        if (rank <= out.rank_plain) out.sufficient_cb = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// generic position equivalences

namespace {

// generators of the conductor as an ideal of R: preimages of the graded
// pieces below r_X plus the whole degree-r_X piece
std::vector<Polynomial> conductor_ideal_gens(const GradedEmbedding& embedding,
                                             const ConductorProfile& profile) {
    const Scheme& scheme = embedding.scheme();
    std::vector<Polynomial> gens;
    for (int i = 0; i < embedding.r_x(); ++i)
        for (const auto& v : profile.bases[i]) gens.push_back(embedding.preimage(v, i));
    for (const auto& m : scheme.graded().std_monomials(embedding.r_x()))
        gens.push_back(Polynomial::monomial(scheme.proj_ring(), m, Scalar::one(scheme.field())));
    return gens;
}

std::vector<Polynomial> power_products(const std::vector<Polynomial>& gens, int n,
                                       const RingPtr& ring) {
    std::vector<Polynomial> out;
    if (gens.empty()) return out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        Polynomial prod = Polynomial::constant(ring, Scalar::one(ring->field));
        for (std::size_t i = 0; i < pick.size(); ++i) prod = prod * gens[pick[i]];
        out.push_back(std::move(prod));
        int pos = n - 1;
        while (pos >= 0 && pick[pos] == gens.size() - 1) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (std::size_t q = pos + 1; q < pick.size(); ++q) pick[q] = pick[pos];
    }
    return out;
}

} // namespace

GenPosEquivalence genpos_equivalence_check(const Scheme& scheme, const GradedIdealView& kaehler,
                                           const GradedEmbedding& embedding,
                                           const ConductorProfile& profile,
                                           bool assume_grid_hypotheses) {
    if (!scheme.is_reduced()) fail("not_reduced", "the equivalence check needs a reduced scheme");
    int n = scheme.n();
    int r = scheme.hilbert().r_x;
    int deg = scheme.degree();

    GenPosEquivalence out;
    out.generic_at_bound = scheme.generic_boundary() == Scheme::GenericBoundary::AtBinomialBound;

    out.kaehler_tail_form = kaehler.hp == deg && kaehler.value(n * r) == deg &&
                            (n * r == 0 || kaehler.value(n * r - 1) == 0);

    CbResult cb = cb_test(embedding, profile);
    bool equal_ideals = false;
    if (cb.is_cb) {
        std::vector<Polynomial> f_gens = conductor_ideal_gens(embedding, profile);
        std::vector<Polynomial> f_power = power_products(f_gens, n, scheme.proj_ring());
        Ideal power_ideal = scheme.ideal().with_extra_generators(f_power);
        equal_ideals = true;
        for (const auto& g : kaehler.gens)
            if (!power_ideal.contains(g)) equal_ideals = false;
        if (equal_ideals)
            for (const auto& g : f_power)
                if (!kaehler.full_ideal.contains(g)) equal_ideals = false;
        if (equal_ideals) {
            // degreewise dimensions agree up to the larger regularity index
            GradedIdealView power_view = graded_ideal_view(scheme, f_power);
            int upto = std::max(kaehler.ri.value_or(0), power_view.ri.value_or(0));
            for (int d = 0; d <= upto; ++d)
                if (power_view.value(d) != kaehler.value(d)) equal_ideals = false;
        }
    }
    out.cb_and_conductor_power = cb.is_cb && equal_ideals;

    out.consistent = (out.generic_at_bound == out.kaehler_tail_form) &&
                     (out.kaehler_tail_form == out.cb_and_conductor_power);

    if (assume_grid_hypotheses) {
        // degree strictly between the binomial bounds fixes alpha
        int alpha = 1;
        while (binomial(n + alpha, n) <= deg) ++alpha;
        bool strict = binomial(n + alpha - 1, n) < deg && deg < binomial(n + alpha, n);
        long long i_alpha = binomial(n + alpha, n) - scheme.hilbert().value(alpha);
        if (strict && alpha > 1 && scheme.hilbert().value(alpha) == deg && i_alpha >= n) {
            bool criterion = kaehler.value(n * alpha - n - 1) == 0;
            out.hf_criterion_low_degree = (criterion == scheme.generic_position());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// classification

ClassificationReport classify(const Scheme& scheme, const GradedIdealView& kaehler,
                              const GradedIdealView& noether, const GradedEmbedding& embedding,
                              const ConductorProfile& profile, bool cross_check) {
    ClassificationReport rep;
    const HilbertTable& hf = scheme.hilbert();
    int n = scheme.n();
    int r = hf.r_x;
    int deg = scheme.degree();
    auto inconsistent = [&](const std::string& what) { rep.consistency_failures.push_back(what); };

    rep.is_generic = scheme.generic_position();
    switch (scheme.generic_boundary()) {
    case Scheme::GenericBoundary::AtBinomialBound:
        rep.boundary_case = "degree_at_binomial_bound";
        break;
    case Scheme::GenericBoundary::StrictlyBetween:
        rep.boundary_case = "strictly_between";
        break;
    case Scheme::GenericBoundary::NotGeneric:
        rep.boundary_case = "none";
        break;
    }
    if (rep.is_generic) {
        long long lhs = static_cast<long long>(r) * deg, rhs = 0;
        for (int i = 0; i < r; ++i) rhs += 2 * hf.value(i);
        if (lhs < rhs) inconsistent("generic position violates r_X deg >= 2 sum HF");
    }

    // conductor chain sanity: F_i increasing ideals
    for (int i = 0; i + 1 < static_cast<int>(profile.dims.size()); ++i)
        if (profile.dims[i] > profile.dims[i + 1])
            inconsistent("conductor graded pieces are not increasing");

    CbResult cb = cb_test(embedding, profile);
    rep.is_cb = cb.is_cb;
    rep.point_degrees = cb.point_degrees;
    if (scheme.has_components()) {
        bool all_r = true;
        for (int d : rep.point_degrees) {
            if (d > r) inconsistent("point degree exceeds r_X");
            if (d != r) all_r = false;
        }
        if (all_r != rep.is_cb)
            inconsistent("conductor vanishing disagrees with the point degrees");
    }
    if (scheme.is_reduced() && kaehler.value(n * r - n) == 0 && !rep.is_cb)
        inconsistent("Kaehler different vanishing in degree n r_X - n did not force CB");

    // locally Gorenstein: Noether Hilbert polynomial vs per-point socles
    rep.is_locally_gorenstein = noether.hp == scheme.residue_dimension();
    // locally CI: Kaehler Hilbert polynomial vs the same count
    rep.is_locally_ci = kaehler.hp == scheme.residue_dimension();
    if (scheme.has_components()) {
        bool all_gor = true, all_ci = true;
        int kappa_ci = 0, kappa_gor = 0;
        for (std::size_t j = 0; j < scheme.components().size(); ++j) {
            LocalDifferentEntry entry = local_kaehler_different(scheme, j, kaehler);
            if (entry.is_ci_point && entry.kaehler_local_dim != entry.kappa)
                inconsistent("local Kaehler different dimension differs from the residue degree");
            if (entry.is_ci_point && !entry.is_gorenstein_point)
                inconsistent("complete intersection point fails the socle test");
            all_gor = all_gor && entry.is_gorenstein_point;
            all_ci = all_ci && entry.is_ci_point;
            if (entry.is_ci_point) kappa_ci += entry.kappa;
            if (entry.is_gorenstein_point) kappa_gor += entry.kappa;
            rep.local_entries.push_back(entry);
        }
        if (all_gor != rep.is_locally_gorenstein)
            inconsistent("per-point Gorenstein flags disagree with HP of the Noether different");
        if (all_ci != rep.is_locally_ci)
            inconsistent("per-point CI flags disagree with HP of the Kaehler different");
        if (kappa_ci != kaehler.hp)
            inconsistent("HP of the Kaehler different is not the CI-point residue count");
        if (kappa_gor != noether.hp)
            inconsistent("HP of the Noether different is not the Gorenstein-point residue count");
    }

    // arithmetically Gorenstein, by every applicable route
    bool route_noether = rep.is_cb && rep.is_locally_gorenstein && noether.value(r) != 0;
    rep.ag_routes["cb_locally_gorenstein_noether_rx"] = route_noether;
    bool symmetric = true;
    for (int i = 0; i < r; ++i)
        if (hf.value(i) != deg - hf.value(r - 1 - i)) symmetric = false;
    rep.ag_routes["cb_symmetric_hilbert"] = rep.is_cb && symmetric;
    bool lengths_equal = profile.len_tilde_over_r == profile.len_r_over_f;
    if (rep.is_locally_gorenstein && rep.is_generic)
        rep.ag_routes["ags_lengths_generic"] = lengths_equal;
    if (rep.is_locally_gorenstein)
        rep.ag_routes["ags_lengths_cb"] = rep.is_cb && lengths_equal;
    rep.is_arith_gorenstein = route_noether;
    for (const auto& [name, verdict] : rep.ag_routes)
        if (verdict != rep.is_arith_gorenstein)
            inconsistent("arithmetically Gorenstein routes disagree: " + name);
    if (rep.is_arith_gorenstein && !lengths_equal)
        inconsistent("arithmetically Gorenstein scheme with unequal conductor lengths");

    // complete intersection, by every applicable route
    rep.ci_witness_hf_kaehler_rx = kaehler.value(r);
    AffineReducedKaehler ark = affine_and_reduced_kaehler(scheme, kaehler);
    rep.ci_routes["reduced_kaehler_nonzero"] = ark.reduced_nonzero;
    rep.ci_routes["cb_locally_gorenstein_kaehler_rx"] =
        rep.is_cb && rep.is_locally_gorenstein && kaehler.value(r) != 0;
    rep.ci_routes["cb_locally_ci_kaehler_rx"] =
        rep.is_cb && kaehler.hp == scheme.residue_dimension() && kaehler.value(r) != 0;
    rep.is_ci = rep.ci_routes["cb_locally_gorenstein_kaehler_rx"];
    for (const auto& [name, verdict] : rep.ci_routes)
        if (verdict != rep.is_ci) inconsistent("complete intersection routes disagree: " + name);

    // hierarchy: CI => arithmetically Gorenstein => locally Gorenstein CB
    if (rep.is_ci && !rep.is_arith_gorenstein)
        inconsistent("complete intersection scheme not arithmetically Gorenstein");
    if (rep.is_arith_gorenstein && !(rep.is_cb && rep.is_locally_gorenstein))
        inconsistent("arithmetically Gorenstein scheme not a locally Gorenstein CB-scheme");

    // locally Gorenstein CB-schemes have no different below r_X
    if (rep.is_locally_gorenstein && rep.is_cb) {
        if (r > 0 && (kaehler.value(r - 1) != 0 || noether.value(r - 1) != 0))
            inconsistent("differents of a locally Gorenstein CB-scheme live below r_X");
    }

    // proven regularity bounds for the Kaehler different
    if (!kaehler.is_zero()) {
        int ri = *kaehler.ri;
        if (ri > (n + 1) * r) inconsistent("ri(Kaehler different) exceeds (n+1) r_X");
        if (n >= 2 && ri > n * r)
            rep.notes.push_back("ri(Kaehler different) exceeds n r_X (open bound in general)");
    }
    if (scheme.is_reduced() && n >= 2) {
        if (kaehler.hp != deg) inconsistent("reduced scheme with HP(Kaehler different) != degree");
        if (!kaehler.is_zero()) {
            int ri = *kaehler.ri;
            if (ri < 2 * r || ri > n * r)
                inconsistent("reduced scheme violates 2 r_X <= ri(Kaehler) <= n r_X");
            if (n == 2 && ri != 2 * r)
                inconsistent("plane reduced scheme with ri(Kaehler) != 2 r_X");
        }
    }
    if (n == 1 && scheme.has_components() && !kaehler.is_zero()) {
        int kappa_ci = 0;
        for (const auto& e : rep.local_entries)
            if (e.is_ci_point) kappa_ci += e.kappa;
        if (*kaehler.ri != r + kappa_ci - 1)
            inconsistent("n = 1 regularity index formula fails for the Kaehler different");
    }

    rep.len_tilde_over_r = profile.len_tilde_over_r;
    rep.len_r_over_f = profile.len_r_over_f;
    if (profile.len_tilde_over_f != profile.len_tilde_over_r + profile.len_r_over_f)
        inconsistent("conductor length additivity fails");

    if (cross_check) {
        InclusionCheck inc = different_inclusions(scheme, kaehler, noether);
        if (!inc.kaehler_in_noether) inconsistent("Kaehler different not inside the Noether different");
        if (!inc.noether_pow_in_kaehler)
            inconsistent("n-th power of the Noether different escapes the Kaehler different");
        GradedIdealView from_original = kaehler_different(scheme, true);
        if (!from_original.full_ideal.equals(kaehler.full_ideal))
            inconsistent("Kaehler different depends on the generating set");
        for (int d = 0; d <= kaehler.ri.value_or(0); ++d)
            if (from_original.value(d) != kaehler.value(d))
                inconsistent("Kaehler different Hilbert functions disagree across generating sets");
    }
    return rep;
}

} // namespace klab

#include "klab/scheme.hpp"

#include <algorithm>

#include "klab/log.hpp"
#include "klab/parse.hpp"

namespace klab {

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// ---------------------------------------------------------------------------
// GradedCoordinates

void GradedCoordinates::build(const Ideal& homogeneous_ideal, int up_to_degree) {
    ideal_ = homogeneous_ideal;
    levels_.clear();
    extend(up_to_degree);
}

void GradedCoordinates::extend(int up_to_degree) {
    const auto& gb = ideal_.groebner_basis();
    const RingPtr& ring = ideal_.ring();
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(g.leading_monomial());
    auto is_standard = [&](const Monomial& m) {
        for (const auto& lm : lms)
            if (lm.divides(m)) return false;
        return true;
    };

    for (int d = static_cast<int>(levels_.size()); d <= up_to_degree; ++d) {
        Level level;
        std::vector<Monomial> monos = monomials_of_degree(ring, d);
        for (const auto& m : monos)
            if (is_standard(m)) level.std_monos.push_back(m);
        std::unordered_map<Monomial, int, MonomialHash> index;
        for (std::size_t k = 0; k < level.std_monos.size(); ++k)
            index.emplace(level.std_monos[k], static_cast<int>(k));
        FieldSpec field = ring->field;
        std::size_t dim = level.std_monos.size();

        auto nf_by_division = [&](const Monomial& m) {
            Polynomial r = normal_form_against(
                Polynomial::monomial(ring, m, Scalar::one(field)), gb, ideal_.order());
            Vec v(dim, Scalar::zero(field));
            for (const auto& t : r.terms()) {
                auto it = index.find(t.mono);
                if (it == index.end()) fail("internal", "normal form left the standard basis");
                v[it->second] = t.coeff;
            }
            return v;
        };

        if (d == 0) {
            for (const auto& m : monos) {
                Vec v(dim, Scalar::zero(field));
                if (dim > 0) v[0] = Scalar::one(field);
                level.nf.emplace(m, std::move(v));
            }
            levels_.push_back(std::move(level));
            continue;
        }

        // border products x_i * (standard monomial of degree d-1) need one
        // real division each; everything else follows linearly
        const Level& prev = levels_[d - 1];
        std::vector<std::vector<Vec>> border(ring->nvars);
        for (int i = 0; i < ring->nvars; ++i) {
            border[i].reserve(prev.std_monos.size());
            for (const auto& b : prev.std_monos) {
                Monomial m = b * Monomial::variable(ring->nvars, i);
                auto it = index.find(m);
                if (it != index.end()) {
                    Vec v(dim, Scalar::zero(field));
                    v[it->second] = Scalar::one(field);
                    border[i].push_back(std::move(v));
                } else {
                    border[i].push_back(nf_by_division(m));
                }
            }
        }
        std::unordered_map<Monomial, int, MonomialHash> prev_index;
        for (std::size_t k = 0; k < prev.std_monos.size(); ++k)
            prev_index.emplace(prev.std_monos[k], static_cast<int>(k));

        for (const auto& m : monos) {
            auto sit = index.find(m);
            if (sit != index.end()) {
                Vec v(dim, Scalar::zero(field));
                v[sit->second] = Scalar::one(field);
                level.nf.emplace(m, std::move(v));
                continue;
            }
            int var = 0;
            while (m.exponent(var) == 0) ++var;
            Monomial quotient = m.with_exponent(var, m.exponent(var) - 1);
            const Vec& down = prev.nf.at(quotient);
            Vec v(dim, Scalar::zero(field));
            for (std::size_t k = 0; k < down.size(); ++k) {
                if (down[k].is_zero()) continue;
                const Vec& b = border[var][k];
                for (std::size_t c = 0; c < dim; ++c)
                    if (!b[c].is_zero()) v[c] += down[k] * b[c];
            }
            level.nf.emplace(m, std::move(v));
        }
        levels_.push_back(std::move(level));
    }
}

const std::vector<Monomial>& GradedCoordinates::std_monomials(int d) const {
    if (d < 0 || d > max_degree()) fail("internal", "graded tables queried beyond their cap");
    return levels_[d].std_monos;
}

int GradedCoordinates::hf(int d) const {
    if (d < 0) return 0;
    return static_cast<int>(std_monomials(d).size());
}

const Vec& GradedCoordinates::monomial_coords(const Monomial& m) const {
    int d = static_cast<int>(m.degree());
    if (d > max_degree()) fail("internal", "graded tables queried beyond their cap");
    return levels_[d].nf.at(m);
}

Vec GradedCoordinates::coords(const Polynomial& f, int d) const {
    FieldSpec field = ideal_.ring()->field;
    Vec v(hf(d), Scalar::zero(field));
    for (const auto& t : f.terms()) {
        if (static_cast<int>(t.mono.degree()) != d)
            fail("internal", "graded coordinates of an inhomogeneous polynomial");
        const Vec& m = monomial_coords(t.mono);
        for (std::size_t c = 0; c < m.size(); ++c)
            if (!m[c].is_zero()) v[c] += t.coeff * m[c];
    }
    return v;
}

Vec GradedCoordinates::product_coords(const Polynomial& f, const Monomial& m, int d) const {
    FieldSpec field = ideal_.ring()->field;
    Vec v(hf(d), Scalar::zero(field));
    for (const auto& t : f.terms()) {
        Monomial prod = t.mono * m;
        if (static_cast<int>(prod.degree()) != d)
            fail("internal", "graded product outside the requested degree");
        const Vec& mc = monomial_coords(prod);
        for (std::size_t c = 0; c < mc.size(); ++c)
            if (!mc[c].is_zero()) v[c] += t.coeff * mc[c];
    }
    return v;
}

Polynomial GradedCoordinates::from_coords(const Vec& v, int d) const {
    const auto& std_monos = std_monomials(d);
    std::vector<Term> ts;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) ts.push_back({std_monos[k], v[k]});
    return Polynomial::from_terms(ideal_.ring(), std::move(ts));
}

// ---------------------------------------------------------------------------
// AffineCoordinates

void AffineCoordinates::build(Ideal affine_ideal) {
    ideal_ = std::move(affine_ideal);
    QuotientBasis qb = quotient_basis(ideal_);
    if (!qb.finite)
        fail("not_zero_dimensional", "affine coordinate ring is not finite-dimensional");
    basis_ = qb.monomials;
    basis_index_.clear();
    for (std::size_t k = 0; k < basis_.size(); ++k)
        basis_index_.emplace(basis_[k], static_cast<int>(k));
    nf_cache_.clear();

    int nv = ideal_.ring()->nvars;
    var_mult_.clear();
    for (int i = 0; i < nv; ++i) {
        Matrix m(basis_.size(), basis_.size(), field());
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            Vec col = monomial_coords(basis_[k] * Monomial::variable(nv, i));
            for (std::size_t r = 0; r < basis_.size(); ++r) m.at(r, k) = col[r];
        }
        var_mult_.push_back(std::move(m));
    }
    basis_mult_.clear();
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        Matrix m(basis_.size(), basis_.size(), field());
        for (std::size_t l = 0; l < basis_.size(); ++l) {
            Vec col = monomial_coords(basis_[k] * basis_[l]);
            for (std::size_t r = 0; r < basis_.size(); ++r) m.at(r, l) = col[r];
        }
        basis_mult_.push_back(std::move(m));
    }
}

Vec AffineCoordinates::monomial_coords(const Monomial& m) const {
    auto bit = basis_index_.find(m);
    if (bit != basis_index_.end()) {
        Vec v(basis_.size(), Scalar::zero(field()));
        v[bit->second] = Scalar::one(field());
        return v;
    }
    auto it = nf_cache_.find(m);
    if (it != nf_cache_.end()) return it->second;
    Polynomial r = ideal_.normal_form(Polynomial::monomial(ideal_.ring(), m, Scalar::one(field())));
    Vec v(basis_.size(), Scalar::zero(field()));
    for (const auto& t : r.terms()) {
        auto idx = basis_index_.find(t.mono);
        if (idx == basis_index_.end()) fail("internal", "affine normal form left the basis");
        v[idx->second] = t.coeff;
    }
    nf_cache_.emplace(m, v);
    return v;
}

Vec AffineCoordinates::coords(const Polynomial& f) const {
    Vec v(basis_.size(), Scalar::zero(field()));
    for (const auto& t : f.terms()) {
        Vec m = monomial_coords(t.mono);
        for (std::size_t c = 0; c < m.size(); ++c)
            if (!m[c].is_zero()) v[c] += t.coeff * m[c];
    }
    return v;
}

Polynomial AffineCoordinates::from_coords(const Vec& v) const {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) ts.push_back({basis_[k], v[k]});
    return Polynomial::from_terms(ideal_.ring(), std::move(ts));
}

Matrix AffineCoordinates::mult_by(const Vec& coords) const {
    Matrix m(basis_.size(), basis_.size(), field());
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_zero()) continue;
        const Matrix& bk = basis_mult_[k];
        for (std::size_t r = 0; r < basis_.size(); ++r)
            for (std::size_t c = 0; c < basis_.size(); ++c)
                if (!bk.at(r, c).is_zero()) m.at(r, c) += coords[k] * bk.at(r, c);
    }
    return m;
}

Vec AffineCoordinates::multiply(const Vec& a, const Vec& b) const {
    Vec out(basis_.size(), Scalar::zero(field()));
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero()) continue;
        Vec col = basis_mult_[k].apply(b);
        for (std::size_t r = 0; r < out.size(); ++r)
            if (!col[r].is_zero()) out[r] += a[k] * col[r];
    }
    return out;
}

EchelonSpan AffineCoordinates::ideal_span(const std::vector<Vec>& gens) const {
    EchelonSpan span(field());
    for (const auto& g : gens)
        for (std::size_t k = 0; k < basis_.size(); ++k) span.insert(basis_mult_[k].apply(g));
    return span;
}

std::vector<Scalar> AffineCoordinates::minimal_polynomial(std::size_t var) const {
    FieldSpec f = field();
    Vec power(basis_.size(), Scalar::zero(f));
    power[basis_index_.at(Monomial(ideal_.ring()->nvars))] = Scalar::one(f);
    std::vector<Vec> powers{power};
    while (true) {
        if (powers.size() > 1) {
            Matrix m(basis_.size(), powers.size() - 1, f);
            for (std::size_t j = 0; j + 1 < powers.size(); ++j)
                for (std::size_t r = 0; r < basis_.size(); ++r) m.at(r, j) = powers[j][r];
            auto sol = m.solve(powers.back());
            if (sol.has_value()) {
                std::vector<Scalar> mu(powers.size(), Scalar::zero(f));
                for (std::size_t j = 0; j + 1 < powers.size(); ++j) mu[j] = -(*sol)[j];
                mu[powers.size() - 1] = Scalar::one(f);
                return mu;
            }
        }
        powers.push_back(var_mult_[var].apply(powers.back()));
    }
}

// ---------------------------------------------------------------------------
// univariate helpers

namespace {

int uni_degree(const std::vector<Scalar>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

std::vector<Scalar> uni_derivative(const std::vector<Scalar>& p, FieldSpec f) {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * Scalar::from_int(static_cast<long>(i), f));
    return d;
}

std::vector<Scalar> uni_mod(std::vector<Scalar> a, const std::vector<Scalar>& b) {
    int db = uni_degree(b);
    if (db < 0) fail("division_by_zero", "univariate remainder by zero");
    Scalar lead_inv = b[db].inverse();
    for (int da = uni_degree(a); da >= db; da = uni_degree(a)) {
        Scalar c = a[da] * lead_inv;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    }
    a.resize(static_cast<std::size_t>(std::max(uni_degree(a) + 1, 0)));
    return a;
}

std::vector<Scalar> uni_gcd(std::vector<Scalar> a, std::vector<Scalar> b) {
    while (uni_degree(b) >= 0) {
        std::vector<Scalar> r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int da = uni_degree(a);
    if (da >= 0) {
        Scalar inv = a[da].inverse();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

std::vector<Scalar> uni_div_exact(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                  FieldSpec f) {
    int da = uni_degree(a), db = uni_degree(b);
    if (da < db) fail("internal", "inexact univariate division");
    std::vector<Scalar> rem = a;
    std::vector<Scalar> q(static_cast<std::size_t>(da - db + 1), Scalar::zero(f));
    Scalar lead_inv = b[db].inverse();
    for (int d = uni_degree(rem); d >= db; d = uni_degree(rem)) {
        Scalar c = rem[d] * lead_inv;
        q[d - db] = c;
        for (int j = 0; j <= db; ++j) rem[d - db + j] -= c * b[j];
    }
    if (uni_degree(rem) >= 0) fail("internal", "inexact univariate division");
    return q;
}

Polynomial univariate_to_poly(const std::vector<Scalar>& p, const RingPtr& ring, int var) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero())
            ts.push_back({Monomial::variable(ring->nvars, var, static_cast<std::uint32_t>(i)), p[i]});
    return Polynomial::from_terms(ring, std::move(ts));
}

} // namespace

std::vector<Scalar> squarefree_part(const std::vector<Scalar>& poly) {
    int d = uni_degree(poly);
    if (d <= 0) return poly;
    FieldSpec f = poly[d].field();
    std::vector<Scalar> g = uni_gcd(poly, uni_derivative(poly, f));
    if (uni_degree(g) == 0) return poly;
    return uni_div_exact(poly, g, f);
}

bool is_squarefree(const std::vector<Scalar>& poly) {
    return uni_degree(squarefree_part(poly)) == uni_degree(poly);
}

// ---------------------------------------------------------------------------
// LocalRing

Vec LocalRing::socle_generator() const {
    if (socle.dimension() == 0) fail("internal", "empty socle");
    std::size_t best = 0;
    for (std::size_t r = 1; r < socle.rows().size(); ++r)
        if (socle.pivots()[r] < socle.pivots()[best]) best = r;
    return socle.rows()[best];
}

std::vector<Vec> LocalRing::residue_basis() const {
    std::vector<Vec> out;
    FieldSpec f = algebra.field();
    for (std::size_t c : residue_cols) {
        Vec v(algebra.dimension(), Scalar::zero(f));
        v[c] = Scalar::one(f);
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scheme construction

namespace {

LocalRing build_local_ring(const Ideal& primary_affine,
                           const std::optional<std::vector<Scalar>>& coords) {
    LocalRing local;
    local.algebra.build(primary_affine);
    const RingPtr& ring = primary_affine.ring();
    FieldSpec f = ring->field;
    int dim = local.algebra.dimension();
    if (dim == 0) fail("meets_hyperplane", "component has empty affine part");
    local.multiplicity = dim;

    if (coords.has_value()) {
        for (int i = 0; i < ring->nvars; ++i) {
            Polynomial gen =
                Polynomial::variable(ring, i) - Polynomial::constant(ring, (*coords)[i + 1]);
            local.maximal_ideal_gens.push_back(std::move(gen));
        }
    } else {
        // Seidenberg: squarefree parts of the per-variable minimal polynomials
        for (int i = 0; i < ring->nvars; ++i) {
            std::vector<Scalar> mu = local.algebra.minimal_polynomial(i);
            local.maximal_ideal_gens.push_back(univariate_to_poly(squarefree_part(mu), ring, i));
        }
    }

    std::vector<Vec> gen_coords;
    for (const auto& g : local.maximal_ideal_gens) gen_coords.push_back(local.algebra.coords(g));
    local.maximal_ideal = local.algebra.ideal_span(gen_coords);
    local.kappa = dim - static_cast<int>(local.maximal_ideal.dimension());
    local.reduced = local.maximal_ideal.dimension() == 0;

    // socle = joint kernel of multiplication by the maximal ideal generators
    Matrix stacked(0, dim, f);
    for (const auto& g : gen_coords) {
        Matrix m = local.algebra.mult_by(g);
        for (std::size_t r = 0; r < m.rows(); ++r) stacked.append_row(m.row(r));
    }
    local.socle = EchelonSpan(f);
    if (stacked.rows() == 0) {
        for (int c = 0; c < dim; ++c) {
            Vec v(dim, Scalar::zero(f));
            v[c] = Scalar::one(f);
            local.socle.insert(std::move(v));
        }
    } else {
        for (auto& v : stacked.kernel_basis()) local.socle.insert(std::move(v));
    }
    local.gorenstein = static_cast<int>(local.socle.dimension()) == local.kappa;

    // lift a K-basis of the residue field: unit vectors off the pivot columns
    std::vector<bool> pivot(dim, false);
    for (std::size_t c : local.maximal_ideal.pivots()) pivot[c] = true;
    for (int c = 0; c < dim; ++c)
        if (!pivot[c]) local.residue_cols.push_back(static_cast<std::size_t>(c));
    return local;
}

} // namespace

const LocalRing& Scheme::local_ring(std::size_t j) const {
    if (!has_components()) fail("no_component_data", "scheme was built from a raw ideal");
    if (j >= components_.size()) fail("bad_component", "component index out of range");
    return components_[j].local;
}

Scheme Scheme::from_components(FieldSpec field, int n, const std::vector<ComponentInput>& inputs,
                               const BuildOptions& options) {
    if (n < 1) fail("bad_dimension", "projective dimension must be at least 1");
    if (inputs.empty()) fail("empty_scheme", "a scheme needs at least one component");
    if (!field.is_rational() && !is_prime_u32(field.p))
        fail("not_prime", std::to_string(field.p) + " is not prime");

    Scheme scheme;
    scheme.field_ = field;
    scheme.n_ = n;
    scheme.proj_ring_ = Ring::projective(n, field);
    scheme.aff_ring_ = Ring::affine(n, field);

    for (const auto& input : inputs) {
        Component comp;
        if (!input.point.has_value() && input.primary_gens.empty())
            fail("bad_component", "component needs a point or a primary ideal");

        if (input.point.has_value()) {
            if (static_cast<int>(input.point->size()) != n + 1)
                fail("bad_component", "point needs n+1 projective coordinates");
            if ((*input.point)[0].is_zero())
                fail("meets_hyperplane", "point lies on the hyperplane X0 = 0");
            std::vector<Scalar> normalized;
            Scalar inv = (*input.point)[0].inverse();
            for (const auto& c : *input.point) normalized.push_back(c * inv);
            comp.coords = std::move(normalized);
        }

        std::vector<Polynomial> homog_gens, affine_gens;
        if (!input.primary_gens.empty()) {
            std::vector<Polynomial> parsed;
            for (const auto& text : input.primary_gens)
                parsed.push_back(parse_polynomial(text, scheme.proj_ring_));
            bool all_homogeneous = true;
            for (const auto& g : parsed)
                if (!g.is_homogeneous()) all_homogeneous = false;
            if (!all_homogeneous) {
                for (const auto& g : parsed)
                    for (const auto& t : g.terms())
                        if (t.mono.exponent(0) != 0)
                            fail("bad_component",
                                 "inhomogeneous primary generators must not involve X0");
            }
            for (const auto& g : parsed) affine_gens.push_back(g.dehomogenized());
            if (all_homogeneous)
                homog_gens = parsed;
            else
                for (const auto& g : affine_gens) homog_gens.push_back(g.homogenized());
        } else {
            // a bare point means the reduced ideal of that point
            for (int i = 1; i <= n; ++i) {
                Polynomial x0 = Polynomial::variable(scheme.proj_ring_, 0);
                Polynomial xi = Polynomial::variable(scheme.proj_ring_, i);
                homog_gens.push_back(xi - x0.scaled((*comp.coords)[i]));
            }
            for (const auto& g : homog_gens) affine_gens.push_back(g.dehomogenized());
        }

        if (comp.coords.has_value() && !input.primary_gens.empty()) {
            std::vector<Scalar> affine_point(comp.coords->begin() + 1, comp.coords->end());
            for (const auto& g : affine_gens)
                if (!g.evaluate(affine_point).is_zero())
                    fail("bad_component", "designated point does not lie on the primary component");
        }

        comp.given_homogeneous = homog_gens;
        Ideal raw_homog(scheme.proj_ring_, std::move(homog_gens));
        comp.primary_homogeneous = saturate_x0(raw_homog);
        if (comp.primary_homogeneous.groebner_basis() != raw_homog.groebner_basis())
            scheme.warnings_.push_back("component ideal was not X0-saturated; saturation applied");
        if (comp.primary_homogeneous.is_unit_ideal())
            fail("meets_hyperplane", "component is supported on the hyperplane X0 = 0");
        comp.primary_affine = Ideal(scheme.aff_ring_, std::move(affine_gens));
        comp.local = build_local_ring(comp.primary_affine, comp.coords);

        // a rational point hides in any multiplicity-one component
        if (!comp.coords.has_value() && comp.local.multiplicity == 1) {
            std::vector<Scalar> coords{Scalar::one(field)};
            for (int i = 0; i < n; ++i) {
                Vec v = comp.local.algebra.monomial_coords(Monomial::variable(n, i));
                coords.push_back(v[0]);
            }
            comp.coords = std::move(coords);
        }
        scheme.components_.push_back(std::move(comp));
    }

    // reject duplicate and overlapping components via their radicals
    std::vector<Ideal> radicals;
    for (const auto& comp : scheme.components_) {
        std::vector<Polynomial> gens = comp.primary_affine.generators();
        for (const auto& g : comp.local.maximal_ideal_gens) gens.push_back(g);
        radicals.push_back(Ideal(scheme.aff_ring_, std::move(gens)));
    }
    for (std::size_t i = 0; i < radicals.size(); ++i)
        for (std::size_t j = i + 1; j < radicals.size(); ++j) {
            if (radicals[i].groebner_basis() == radicals[j].groebner_basis())
                fail("duplicate_component", "two components share the same support");
            Ideal sum = ideal_sum(radicals[i], radicals[j]);
            if (!sum.is_unit_ideal())
                fail("overlapping_components", "component supports are not disjoint");
        }

    Ideal intersection = scheme.components_.front().primary_homogeneous;
    for (std::size_t j = 1; j < scheme.components_.size(); ++j)
        intersection = ideal_intersection(intersection, scheme.components_[j].primary_homogeneous);
    scheme.ideal_ = saturate_x0(intersection);
    scheme.finalize(options);
    return scheme;
}

Scheme Scheme::from_ideal(FieldSpec field, int n, std::vector<Polynomial> homogeneous_gens,
                          const BuildOptions& options) {
    if (n < 1) fail("bad_dimension", "projective dimension must be at least 1");
    if (!field.is_rational() && !is_prime_u32(field.p))
        fail("not_prime", std::to_string(field.p) + " is not prime");
    Scheme scheme;
    scheme.field_ = field;
    scheme.n_ = n;
    scheme.proj_ring_ = Ring::projective(n, field);
    scheme.aff_ring_ = Ring::affine(n, field);
    for (const auto& g : homogeneous_gens) {
        if (!g.ring()->same(*scheme.proj_ring_)) fail("ring_mismatch", "generator ring mismatch");
        if (!g.is_homogeneous())
            fail("not_homogeneous", "raw scheme ideals must have homogeneous generators");
    }
    Ideal raw(scheme.proj_ring_, std::move(homogeneous_gens));
    if (raw.is_unit_ideal()) fail("empty_scheme", "the ideal defines the empty scheme");
    scheme.ideal_ = saturate_x0(raw);
    if (scheme.ideal_.groebner_basis() != raw.groebner_basis())
        scheme.warnings_.push_back("input ideal was not X0-saturated; saturation applied");
    scheme.finalize(options);
    return scheme;
}

void Scheme::finalize(const BuildOptions& options) {
    options_ = options;
    // affine coordinate ring S = R / <x0 - 1>
    std::vector<Polynomial> affine_gens;
    for (const auto& g : ideal_.groebner_basis()) affine_gens.push_back(g.dehomogenized());
    affine_ideal_ = Ideal(aff_ring_, std::move(affine_gens));
    algebra_.build(affine_ideal_);
    degree_ = algebra_.dimension();
    if (degree_ == 0) fail("empty_scheme", "the scheme is empty");
    if (!field_.is_rational() && static_cast<int>(field_.p) <= degree_)
        fail("char_guard", "characteristic " + std::to_string(field_.p) +
                               " must exceed the degree " + std::to_string(degree_));

    if (has_components()) {
        int total = 0;
        for (const auto& comp : components_) total += comp.local.multiplicity;
        if (total != degree_)
            fail("component_degree_mismatch",
                 "component multiplicities sum to " + std::to_string(total) +
                     ", scheme degree is " + std::to_string(degree_));
    }

    // Hilbert function: grow the graded tables until the value stabilizes
    graded_.build(ideal_, 0);
    int r_x = 0;
    while (graded_.hf(r_x) != degree_) {
        if (graded_.hf(r_x) > degree_) fail("internal", "Hilbert function exceeded the degree");
        ++r_x;
        graded_.extend(r_x);
    }
    int cap = std::max((n_ + 1) * r_x + n_, r_x + 2);
    if (options.max_degree > cap) cap = options.max_degree;
    graded_.extend(cap);

    hilbert_.r_x = r_x;
    hilbert_.degree = degree_;
    int i_max = std::max((n_ + 1) * r_x, r_x + 1);
    for (int i = 0; i <= i_max; ++i) hilbert_.values.push_back(graded_.hf(i));
    hilbert_.alpha_x = 0;
    while (hilbert_.value(hilbert_.alpha_x) == binomial(n_ + hilbert_.alpha_x, n_))
        ++hilbert_.alpha_x;
    // the standing pattern: strictly increasing from 1, then constant
    for (int i = 0; i < r_x; ++i)
        if (!(hilbert_.value(i) < hilbert_.value(i + 1)))
            fail("internal", "Hilbert function not strictly increasing below its regularity index");
    if (hilbert_.value(0) != 1) fail("internal", "HF(0) != 1");

    // reducedness and the radical of J_X by Seidenberg
    reduced_ = true;
    for (int i = 0; i < n_; ++i) {
        std::vector<Scalar> mu = algebra_.minimal_polynomial(i);
        std::vector<Scalar> sf = squarefree_part(mu);
        if (sf.size() != mu.size()) reduced_ = false;
        radical_gens_affine_.push_back(univariate_to_poly(sf, aff_ring_, i));
    }
    if (reduced_) {
        s_red_dim_ = degree_;
    } else {
        Ideal radical = affine_ideal_.with_extra_generators(radical_gens_affine_);
        s_red_dim_ = quotient_basis(radical).total();
    }
    if (has_components()) {
        bool comps_reduced = true;
        int kappa_sum = 0;
        for (const auto& comp : components_) {
            comps_reduced = comps_reduced && comp.local.reduced;
            kappa_sum += comp.local.kappa;
        }
        if (comps_reduced != reduced_)
            fail("internal", "per-component and global reducedness disagree");
        if (kappa_sum != s_red_dim_)
            fail("internal", "sum of residue degrees disagrees with the radical dimension");
        compute_crt();
    }
    log_info("scheme: degree ", degree_, ", r_X = ", hilbert_.r_x, ", alpha_X = ", hilbert_.alpha_x,
             ", table cap ", graded_.max_degree());
}

void Scheme::compute_crt() {
    projections_.clear();
    Matrix stacked(0, degree_, field_);
    for (auto& comp : components_) {
        const auto& local = comp.local;
        Matrix proj(local.multiplicity, degree_, field_);
        for (int c = 0; c < degree_; ++c) {
            Vec col = local.algebra.monomial_coords(algebra_.basis()[c]);
            for (int r = 0; r < local.multiplicity; ++r) proj.at(r, c) = col[r];
        }
        for (std::size_t r = 0; r < proj.rows(); ++r) stacked.append_row(proj.row(r));
        projections_.push_back(std::move(proj));
    }
    auto inv = stacked.inverse();
    if (!inv.has_value())
        fail("overlapping_components", "components do not decompose the coordinate ring");
    crt_inverse_ = std::move(*inv);
}

Vec Scheme::project(std::size_t j, const Vec& s_coords) const {
    return projections_.at(j).apply(s_coords);
}

Vec Scheme::embed(const std::vector<Vec>& per_component) const {
    if (per_component.size() != components_.size())
        fail("bad_component", "embed needs one block per component");
    Vec stacked;
    for (std::size_t j = 0; j < per_component.size(); ++j) {
        if (per_component[j].size() != static_cast<std::size_t>(components_[j].local.multiplicity))
            fail("bad_component", "embed block has wrong dimension");
        stacked.insert(stacked.end(), per_component[j].begin(), per_component[j].end());
    }
    return crt_inverse_.apply(stacked);
}

bool Scheme::generic_position() const {
    for (int i = 0; i <= hilbert_.r_x; ++i) {
        long long expected = std::min<long long>(degree_, binomial(n_ + i, n_));
        if (hilbert_.value(i) != expected) return false;
    }
    return true;
}

Scheme::GenericBoundary Scheme::generic_boundary() const {
    if (!generic_position()) return GenericBoundary::NotGeneric;
    if (degree_ == binomial(n_ + hilbert_.alpha_x - 1, n_)) return GenericBoundary::AtBinomialBound;
    return GenericBoundary::StrictlyBetween;
}

} // namespace klab

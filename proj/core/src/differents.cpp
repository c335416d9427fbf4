#include "klab/differents.hpp"

#include <algorithm>
#include <future>

#include "klab/log.hpp"

namespace klab {

namespace {

int compare_polynomials(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const Ring& ring = *a.ring();
    std::size_t k = 0;
    while (k < a.term_count() && k < b.term_count()) {
        int c = canonical_compare(a.terms()[k].mono, b.terms()[k].mono, ring);
        if (c != 0) return -c;  // larger leading monomial first
        ++k;
    }
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count() ? -1 : 1;
    return 0;
}

// normal forms of the candidates mod I_X, optionally in parallel
std::vector<Polynomial> reduced_candidates(const Scheme& scheme, std::vector<Polynomial> cands) {
    const auto& gb = scheme.ideal().groebner_basis();
    const auto order = scheme.ideal().order();
    auto reduce_one = [&](const Polynomial& g) { return normal_form_against(g, gb, order); };
    std::vector<Polynomial> nfs(cands.size(), Polynomial::zero(scheme.proj_ring()));
    int threads = scheme.options().threads;
    if (threads > 1 && cands.size() > 1) {
        std::vector<std::future<Polynomial>> futs;
        futs.reserve(cands.size());
        for (const auto& g : cands)
            futs.push_back(std::async(std::launch::async, reduce_one, g));
        for (std::size_t i = 0; i < futs.size(); ++i) nfs[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < cands.size(); ++i) nfs[i] = reduce_one(cands[i]);
    }
    std::vector<Polynomial> out;
    for (auto& nf : nfs) {
        if (nf.is_zero()) continue;
        if (!nf.is_homogeneous())
            fail("not_homogeneous", "graded ideal generator is not homogeneous mod I_X");
        Polynomial normal = nf.normalized();
        bool seen = false;
        for (const auto& existing : out)
            if (existing == normal) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(std::move(normal));
    }
    std::sort(out.begin(), out.end(),
              [](const Polynomial& a, const Polynomial& b) { return compare_polynomials(a, b) < 0; });
    return out;
}

} // namespace

GradedIdealView graded_ideal_view(const Scheme& scheme, std::vector<Polynomial> gens_in_p) {
    GradedIdealView view;
    FieldSpec f = scheme.field();
    std::vector<Polynomial> reduced = reduced_candidates(scheme, std::move(gens_in_p));

    // dimension of the dehomogenized ideal inside S; it is the Hilbert
    // polynomial because multiplication by x0 is injective
    std::vector<Vec> s_gens;
    for (const auto& g : reduced) s_gens.push_back(scheme.algebra().coords(g.dehomogenized()));
    view.affine_dim = static_cast<int>(scheme.algebra().ideal_span(s_gens).dimension());
    view.hp = view.affine_dim;

    if (reduced.empty()) {
        view.full_ideal = scheme.ideal();
        return view;
    }

    int cap = scheme.table_cap();
    for (int d = 0;; ++d) {
        if (d > cap)
            fail("stabilization_overflow",
                 "graded ideal dimensions did not stabilize below degree " + std::to_string(cap));
        EchelonSpan span(f);
        bool reached = false;
        for (const auto& g : reduced) {
            int e = g.degree();
            if (e > d) continue;
            for (const auto& m : scheme.graded().std_monomials(d - e)) {
                span.insert(scheme.graded().product_coords(g, m, d));
                if (static_cast<int>(span.dimension()) == view.affine_dim) {
                    reached = true;
                    break;
                }
            }
            if (reached) break;
        }
        int dim = static_cast<int>(span.dimension());
        if (d > 0 && dim < view.hf.back())
            fail("internal", "graded ideal dimensions are not monotone");
        view.hf.push_back(dim);
        if (dim == view.affine_dim) {
            view.ri = d;
            break;
        }
    }

    // greedy minimal generating set, lowest degrees first
    std::vector<Polynomial> minimal;
    Ideal accum = scheme.ideal();
    for (const auto& g : reduced) {
        if (!minimal.empty() && accum.contains(g)) continue;
        minimal.push_back(g);
        accum = scheme.ideal().with_extra_generators(minimal);
    }
    view.gens = std::move(minimal);
    view.full_ideal = std::move(accum);
    return view;
}

GradedIdealView kaehler_different(const Scheme& scheme, bool from_original_gens) {
    const std::vector<Polynomial>& gens = from_original_gens
                                              ? scheme.ideal().generators()
                                              : scheme.ideal().groebner_basis();
    std::vector<Polynomial> minors = jacobian_minors(gens);
    log_info("kaehler different: ", minors.size(), " minors from ", gens.size(), " generators");
    return graded_ideal_view(scheme, std::move(minors));
}

namespace {

struct EnvelopingRing {
    RingPtr ring;
    int n = 0;

    // lift a projective polynomial, sending X_i (i >= 1) to the X or Y block
    Polynomial lift(const Polynomial& p, bool to_y) const {
        std::vector<Term> ts;
        ts.reserve(p.term_count());
        for (const auto& t : p.terms()) {
            std::vector<std::uint32_t> e(2 * n + 1, 0);
            e[0] = t.mono.exponent(0);
            for (int i = 1; i <= n; ++i) e[to_y ? n + i : i] = t.mono.exponent(i);
            ts.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(ring, std::move(ts));
    }

    // substitute Y_i -> X_i and land back in the projective ring
    Polynomial substitute_diagonal(const Polynomial& p, const RingPtr& proj) const {
        std::vector<Term> ts;
        ts.reserve(p.term_count());
        for (const auto& t : p.terms()) {
            std::vector<std::uint32_t> e(n + 1, 0);
            e[0] = t.mono.exponent(0);
            for (int i = 1; i <= n; ++i) e[i] = t.mono.exponent(i) + t.mono.exponent(n + i);
            ts.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(proj, std::move(ts));
    }
};

EnvelopingRing make_enveloping_ring(const Scheme& scheme) {
    int n = scheme.n();
    std::vector<std::string> names;
    names.push_back("X0");
    for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
    std::vector<int> priority;
    for (int i = 1; i <= n; ++i) priority.push_back(i);
    for (int i = 1; i <= n; ++i) priority.push_back(n + i);
    priority.push_back(0);
    return EnvelopingRing{Ring::scratch(std::move(names), scheme.field(), std::move(priority)), n};
}

} // namespace

GradedIdealView noether_different(const Scheme& scheme) {
    EnvelopingRing env = make_enveloping_ring(scheme);
    std::vector<Polynomial> env_gens;
    for (const auto& g : scheme.ideal().groebner_basis()) {
        env_gens.push_back(env.lift(g, false));
        env_gens.push_back(env.lift(g, true));
    }
    Ideal enveloping(env.ring, std::move(env_gens));

    std::vector<Polynomial> diagonal;
    for (int i = 1; i <= env.n; ++i)
        diagonal.push_back(Polynomial::variable(env.ring, i) -
                           Polynomial::variable(env.ring, env.n + i));
    Ideal diag(env.ring, std::move(diagonal));

    Ideal annihilator = ideal_colon(enveloping, diag);
    std::vector<Polynomial> images;
    for (const auto& c : annihilator.groebner_basis()) {
        if (!c.is_homogeneous())
            fail("internal", "the diagonal colon lost homogeneity");
        images.push_back(env.substitute_diagonal(c, scheme.proj_ring()));
    }
    log_info("noether different: ", images.size(), " colon generators");
    return graded_ideal_view(scheme, std::move(images));
}

std::vector<int> noether_hilbert_by_kernels(const Scheme& scheme, int upto) {
    if (upto + 1 > scheme.table_cap())
        fail("internal", "kernel route needs graded tables one degree past the request");
    const GradedCoordinates& graded = scheme.graded();
    FieldSpec f = scheme.field();
    int n = scheme.n();

    // homogeneous K[x0]-basis of R: the x0-free standard monomials
    std::vector<Monomial> basis;
    std::vector<int> delta;
    for (int d = 0; d <= scheme.hilbert().r_x; ++d)
        for (const auto& m : graded.std_monomials(d))
            if (m.exponent(0) == 0) {
                basis.push_back(m);
                delta.push_back(d);
            }
    int nb = static_cast<int>(basis.size());
    if (nb != scheme.degree()) fail("internal", "free basis size disagrees with the degree");

    // decompose a standard monomial into x0^a * (x0-free basis element)
    auto split = [&](const Monomial& m) {
        Monomial bare = m.with_exponent(0, 0);
        for (int k = 0; k < nb; ++k)
            if (basis[k] == bare) return std::pair<int, int>(k, static_cast<int>(m.exponent(0)));
        fail("internal", "standard monomial without x0-free core");
    };

    // x_i * b_k expanded over x0^a b_l
    struct Expansion {
        int l, a;
        Scalar c;
    };
    std::vector<std::vector<std::vector<Expansion>>> mult(n + 1);
    for (int i = 1; i <= n; ++i) {
        mult[i].resize(nb);
        for (int k = 0; k < nb; ++k) {
            Monomial prod = basis[k] * Monomial::variable(n + 1, i);
            const Vec& coords = graded.monomial_coords(prod);
            const auto& stds = graded.std_monomials(delta[k] + 1);
            for (std::size_t s = 0; s < coords.size(); ++s) {
                if (coords[s].is_zero()) continue;
                auto [l, a] = split(stds[s]);
                mult[i][k].push_back({l, a, coords[s]});
            }
        }
    }

    auto tensor_basis = [&](int d) {
        std::vector<std::pair<int, int>> tb;
        for (int k = 0; k < nb; ++k)
            for (int l = 0; l < nb; ++l)
                if (delta[k] + delta[l] <= d) tb.push_back({k, l});
        return tb;
    };

    std::vector<int> values;
    for (int d = 0; d <= upto; ++d) {
        auto tb_d = tensor_basis(d);
        auto tb_up = tensor_basis(d + 1);
        auto up_index = [&](int k, int l) {
            for (std::size_t idx = 0; idx < tb_up.size(); ++idx)
                if (tb_up[idx].first == k && tb_up[idx].second == l) return idx;
            fail("internal", "tensor basis lookup failed");
        };
        // stacked multiplication by x_i (x) 1 - 1 (x) x_i for all i
        Matrix stacked(n * tb_up.size(), tb_d.size(), f);
        for (std::size_t col = 0; col < tb_d.size(); ++col) {
            auto [k, l] = tb_d[col];
            for (int i = 1; i <= n; ++i) {
                std::size_t block = static_cast<std::size_t>(i - 1) * tb_up.size();
                for (const auto& e : mult[i][k])
                    stacked.at(block + up_index(e.l, l), col) += e.c;
                for (const auto& e : mult[i][l])
                    stacked.at(block + up_index(k, e.l), col) -= e.c;
            }
        }
        // multiplication map down to R_d
        Matrix mu(graded.hf(d), tb_d.size(), f);
        for (std::size_t col = 0; col < tb_d.size(); ++col) {
            auto [k, l] = tb_d[col];
            Monomial m = basis[k] * basis[l];
            int a = d - delta[k] - delta[l];
            m = m.with_exponent(0, m.exponent(0) + static_cast<std::uint32_t>(a));
            const Vec& coords = graded.monomial_coords(m);
            for (std::size_t r = 0; r < coords.size(); ++r) mu.at(r, col) = coords[r];
        }
        EchelonSpan image(f);
        for (const auto& w : stacked.kernel_basis()) image.insert(mu.apply(w));
        values.push_back(static_cast<int>(image.dimension()));
    }
    return values;
}

AffineReducedKaehler affine_and_reduced_kaehler(const Scheme& scheme,
                                                const GradedIdealView& kaehler) {
    AffineReducedKaehler out;
    out.affine_dim = kaehler.affine_dim;
    Ideal with_x0 = scheme.ideal().with_extra_generators(
        {Polynomial::variable(scheme.proj_ring(), 0)});
    for (const auto& g : kaehler.gens)
        if (!with_x0.contains(g)) {
            out.reduced_nonzero = true;
            break;
        }
    return out;
}

LocalDifferentEntry local_kaehler_different(const Scheme& scheme, std::size_t j,
                                            const GradedIdealView& kaehler) {
    const LocalRing& local = scheme.local_ring(j);
    std::vector<Vec> images;
    for (const auto& g : kaehler.gens)
        images.push_back(local.algebra.coords(g.dehomogenized()));
    LocalDifferentEntry entry;
    entry.kaehler_local_dim = static_cast<int>(local.algebra.ideal_span(images).dimension());
    entry.is_ci_point = entry.kaehler_local_dim > 0;
    entry.is_gorenstein_point = local.gorenstein;
    entry.socle_dim = static_cast<int>(local.socle.dimension());
    entry.kappa = local.kappa;
    entry.multiplicity = local.multiplicity;
    return entry;
}

InclusionCheck different_inclusions(const Scheme& scheme, const GradedIdealView& kaehler,
                                    const GradedIdealView& noether) {
    InclusionCheck check;
    check.kaehler_in_noether = true;
    for (const auto& g : kaehler.gens)
        if (!noether.full_ideal.contains(g)) {
            check.kaehler_in_noether = false;
            break;
        }
    // every n-fold product of Noether generators must land in the Kaehler ideal
    check.noether_pow_in_kaehler = true;
    int n = scheme.n();
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    if (!noether.gens.empty()) {
        while (true) {
            Polynomial prod = Polynomial::constant(scheme.proj_ring(), Scalar::one(scheme.field()));
            for (std::size_t i = 0; i < pick.size(); ++i) prod = prod * noether.gens[pick[i]];
            if (!kaehler.full_ideal.contains(prod)) {
                check.noether_pow_in_kaehler = false;
                break;
            }
            // next multiset (non-decreasing index tuples)
            int pos = n - 1;
            while (pos >= 0 && pick[pos] == noether.gens.size() - 1) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (std::size_t q = pos + 1; q < pick.size(); ++q) pick[q] = pick[pos];
        }
    }
    return check;
}

} // namespace klab

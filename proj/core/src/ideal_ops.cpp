#include "klab/ideal_ops.hpp"

#include <algorithm>

namespace klab {

namespace {

// scratch ring with one auxiliary elimination variable in front
RingPtr ring_with_aux(const Ring& base) {
    std::vector<std::string> names;
    names.push_back("t@");
    names.insert(names.end(), base.names.begin(), base.names.end());
    std::vector<int> priority;
    priority.push_back(0);
    for (int v : base.priority) priority.push_back(v + 1);
    return Ring::scratch(std::move(names), base.field, std::move(priority));
}

Polynomial lift_with_aux(const Polynomial& p, const RingPtr& ext) {
    std::vector<Term> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> e;
        e.reserve(t.mono.nvars() + 1);
        e.push_back(0);
        e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
        ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(ext, std::move(ts));
}

Polynomial drop_aux(const Polynomial& p, const RingPtr& base) {
    std::vector<Term> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        if (t.mono.exponent(0) != 0) fail("internal", "auxiliary variable survived elimination");
        std::vector<std::uint32_t> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
        ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(base, std::move(ts));
}

// Split generators into homogeneous components when both inputs were
// homogeneous: the resulting ideal is graded, so each component stays in it.
std::vector<Polynomial> homogeneous_split(std::vector<Polynomial> gens, bool inputs_homogeneous) {
    if (!inputs_homogeneous) return gens;
    std::vector<Polynomial> out;
    for (const auto& g : gens) {
        if (g.is_homogeneous()) {
            out.push_back(g);
            continue;
        }
        for (int d : g.occurring_degrees()) out.push_back(g.homogeneous_component(d));
    }
    return out;
}

} // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same(*b.ring())) fail("ring_mismatch", "ideal sum over different rings");
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens), a.order());
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same(*b.ring())) fail("ring_mismatch", "ideal product over different rings");
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens), a.order());
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same(*b.ring())) fail("ring_mismatch", "ideal intersection over different rings");
    const RingPtr& base = a.ring();
    bool homog = a.generators_homogeneous() && b.generators_homogeneous();
    RingPtr ext = ring_with_aux(*base);
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, Scalar::one(ext->field)) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * lift_with_aux(f, ext));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * lift_with_aux(g, ext));
    Ideal extended(ext, std::move(gens), MonomialOrder::block_elimination(1));
    std::vector<Polynomial> kept;
    for (const auto& g : extended.groebner_basis())
        if (g.leading_monomial().exponent(0) == 0) kept.push_back(drop_aux(g, base));
    kept = homogeneous_split(std::move(kept), homog);
    return Ideal(base, std::move(kept), a.order());
}

Ideal ideal_colon_single(const Ideal& a, const Polynomial& g) {
    if (g.is_zero()) fail("division_by_zero", "colon by the zero polynomial");
    Ideal principal(a.ring(), {g}, a.order());
    Ideal meet = ideal_intersection(a, principal);
    std::vector<Polynomial> gens;
    for (const auto& h : meet.generators()) {
        auto q = divide_exact(h, g);
        if (!q.has_value()) fail("internal", "colon witness not divisible by its generator");
        gens.push_back(std::move(*q));
    }
    return Ideal(a.ring(), std::move(gens), a.order());
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same(*b.ring())) fail("ring_mismatch", "ideal colon over different rings");
    if (b.generators().empty()) fail("division_by_zero", "colon by the zero ideal");
    bool homog = a.generators_homogeneous() && b.generators_homogeneous();
    Ideal result = ideal_colon_single(a, b.generators().front());
    for (std::size_t i = 1; i < b.generators().size(); ++i)
        result = ideal_intersection(result, ideal_colon_single(a, b.generators()[i]));
    if (homog)
        for (const auto& g : result.generators())
            if (!g.is_homogeneous()) fail("internal", "homogeneous colon produced inhomogeneous generator");
    return result;
}

Ideal eliminate(const Ideal& a, const std::set<int>& drop_vars) {
    const RingPtr& base = a.ring();
    for (int v : drop_vars)
        if (v < 0 || v >= base->nvars) fail("bad_variable", "eliminated variable outside ring");
    // reorder priority: dropped variables first
    std::vector<int> priority;
    for (int v : drop_vars) priority.push_back(v);
    for (int v : base->priority)
        if (drop_vars.find(v) == drop_vars.end()) priority.push_back(v);
    RingPtr reordered = Ring::scratch(base->names, base->field, priority);
    std::vector<Polynomial> lifted;
    for (const auto& g : a.generators())
        lifted.push_back(Polynomial::from_terms(reordered, g.terms()));
    Ideal extended(reordered, std::move(lifted),
                   MonomialOrder::block_elimination(static_cast<int>(drop_vars.size())));
    std::vector<Polynomial> kept;
    for (const auto& g : extended.groebner_basis()) {
        bool uses_dropped = false;
        for (const auto& t : g.terms()) {
            for (int v : drop_vars)
                if (t.mono.exponent(v) != 0) {
                    uses_dropped = true;
                    break;
                }
            if (uses_dropped) break;
        }
        if (!uses_dropped) kept.push_back(Polynomial::from_terms(base, g.terms()));
    }
    return Ideal(base, std::move(kept), a.order());
}

Ideal saturate_x0(const Ideal& a) {
    if (!a.ring()->is_projective()) fail("ring_mismatch", "saturation by X0 needs a projective ring");
    Polynomial x0 = Polynomial::variable(a.ring(), 0);
    Ideal current = a;
    while (true) {
        Ideal next = ideal_colon_single(current, x0);
        if (next.groebner_basis() == current.groebner_basis()) return current;
        current = std::move(next);
    }
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(ring->nvars, 0);
    // lexicographic enumeration over exponent vectors of fixed total degree
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == ring->nvars - 1) {
            e[var] = remaining;
            out.push_back(Monomial(e));
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[var] = k;
            self(self, var + 1, remaining - k);
        }
        e[var] = 0;
    };
    if (ring->nvars == 0) {
        if (degree == 0) out.push_back(Monomial(std::vector<std::uint32_t>{}));
        return out;
    }
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) {
        return canonical_compare(x, y, *ring) > 0;
    });
    return out;
}

QuotientBasis quotient_basis(const Ideal& a, int degree_cap) {
    const auto& gb = a.groebner_basis();
    QuotientBasis qb;
    if (!gb.empty() && gb.front().degree() == 0) {
        // unit ideal: empty quotient
        qb.finite = true;
        qb.degree_cap = degree_cap;
        return qb;
    }
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(g.leading_monomial());

    // A quotient by an affine ideal is finite-dimensional iff every variable
    // shows up as a pure power among the leading monomials.
    bool finite = true;
    for (int v = 0; v < a.ring()->nvars; ++v) {
        bool pure_power = false;
        for (const auto& m : lms) {
            bool pure = m.exponent(v) > 0;
            for (int w = 0; pure && w < a.ring()->nvars; ++w)
                if (w != v && m.exponent(w) != 0) pure = false;
            if (pure) {
                pure_power = true;
                break;
            }
        }
        if (!pure_power) {
            finite = false;
            break;
        }
    }
    qb.finite = finite;

    int cap = degree_cap;
    if (cap < 0) {
        // safe upper bound on standard-monomial degrees in the finite case
        cap = a.ring()->nvars;
        for (const auto& m : lms) cap += m.degree();
    }
    qb.degree_cap = cap;

    for (int d = 0; d <= cap; ++d) {
        int count = 0;
        for (const auto& m : monomials_of_degree(a.ring(), d)) {
            bool standard = true;
            for (const auto& lm : lms)
                if (lm.divides(m)) {
                    standard = false;
                    break;
                }
            if (standard) {
                qb.monomials.push_back(m);
                ++count;
            }
        }
        qb.per_degree.push_back(count);
        if (count == 0) return qb;
    }
    return qb;
}

} // namespace klab

#include "klab/ideal.hpp"

#include <algorithm>
#include <map>

#include "klab/log.hpp"

namespace klab {

namespace {

// Working polynomial for the Buchberger loop: terms sorted descending under
// the engine order, with the sugar degree alongside.
struct WPoly {
    std::vector<Term> terms;
    int sugar = 0;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().mono; }
    const Scalar& lc() const { return terms.front().coeff; }
};

struct Engine {
    const Ring& ring;
    MonomialOrder order;

    bool less(const Monomial& a, const Monomial& b) const { return order.less(a, b, ring); }

    std::vector<Term> sorted_terms(const Polynomial& p) const {
        std::vector<Term> ts = p.terms();
        std::stable_sort(ts.begin(), ts.end(), [&](const Term& x, const Term& y) {
            return order.compare(x.mono, y.mono, ring) > 0;
        });
        return ts;
    }

    WPoly to_wpoly(const Polynomial& p) const {
        return WPoly{sorted_terms(p), p.degree()};
    }

    Polynomial to_polynomial(const WPoly& w, const RingPtr& rp) const {
        return Polynomial::from_terms(rp, w.terms);
    }

    // a - c * X^m * b, merging sorted term lists
    std::vector<Term> sub_mul(const std::vector<Term>& a, const Scalar& c, const Monomial& m,
                              const std::vector<Term>& b) const {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size()) {
                out.push_back(a[i++]);
                continue;
            }
            Monomial bm = b[j].mono * m;
            if (i == a.size()) {
                out.push_back({std::move(bm), -(c * b[j].coeff)});
                ++j;
                continue;
            }
            int cmp = order.compare(a[i].mono, bm, ring);
            if (cmp > 0) {
                out.push_back(a[i++]);
            } else if (cmp < 0) {
                out.push_back({std::move(bm), -(c * b[j].coeff)});
                ++j;
            } else {
                Scalar v = a[i].coeff - c * b[j].coeff;
                if (!v.is_zero()) out.push_back({a[i].mono, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    void normalize(WPoly& w) const {
        if (w.is_zero()) return;
        if (ring.field.is_rational()) {
            // primitive integer form with positive leading coefficient
            mpz_class den_lcm = 1, num_gcd = 0;
            for (const auto& t : w.terms) {
                mpz_class d = t.coeff.rational_value().get_den();
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
                den_lcm = den_lcm / g * d;
            }
            for (const auto& t : w.terms) {
                mpz_class n =
                    t.coeff.rational_value().get_num() * (den_lcm / t.coeff.rational_value().get_den());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
            }
            if (num_gcd == 0) num_gcd = 1;
            mpq_class factor(den_lcm, num_gcd);
            factor.canonicalize();
            Scalar f = Scalar::rational(factor);
            if ((w.lc() * f).rational_value() < 0) f = -f;
            for (auto& t : w.terms) t.coeff = t.coeff * f;
        } else {
            Scalar inv = w.lc().inverse();
            if (!inv.is_one())
                for (auto& t : w.terms) t.coeff = t.coeff * inv;
        }
    }

    void make_monic(WPoly& w) const {
        if (w.is_zero() || w.lc().is_one()) return;
        Scalar inv = w.lc().inverse();
        for (auto& t : w.terms) t.coeff = t.coeff * inv;
    }

    // Full reduction against basis; deterministic (first divisor wins).
    WPoly reduce_full(WPoly f, const std::vector<WPoly>& basis) const {
        std::vector<Term> result;
        std::vector<Term> work = std::move(f.terms);
        int sugar = f.sugar;
        while (!work.empty()) {
            const Term& lt = work.front();
            const WPoly* divisor = nullptr;
            for (const auto& g : basis)
                if (!g.is_zero() && g.lm().divides(lt.mono)) {
                    divisor = &g;
                    break;
                }
            if (divisor == nullptr) {
                result.push_back(lt);
                work.erase(work.begin());
                continue;
            }
            Monomial q = divisor->lm().quotient_into(lt.mono);
            Scalar c = lt.coeff / divisor->lc();
            sugar = std::max(sugar, divisor->sugar + static_cast<int>(q.degree()));
            work = sub_mul(work, c, q, divisor->terms);
        }
        return WPoly{std::move(result), sugar};
    }

    WPoly s_polynomial(const WPoly& f, const WPoly& g) const {
        Monomial l = f.lm().lcm(g.lm());
        Monomial qf = f.lm().quotient_into(l);
        Monomial qg = g.lm().quotient_into(l);
        std::vector<Term> lhs;
        lhs.reserve(f.terms.size());
        Scalar inv_f = f.lc().inverse();
        for (const auto& t : f.terms) lhs.push_back({t.mono * qf, t.coeff * inv_f});
        std::vector<Term> res = sub_mul(lhs, g.lc().inverse(), qg, g.terms);
        int sugar = std::max(f.sugar + static_cast<int>(qf.degree()),
                             g.sugar + static_cast<int>(qg.degree()));
        return WPoly{std::move(res), sugar};
    }
};

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
};

} // namespace

std::vector<Polynomial> buchberger_reduced_basis(const RingPtr& ring,
                                                 const std::vector<Polynomial>& gens,
                                                 const MonomialOrder& order) {
    Engine eng{*ring, order};
    std::vector<WPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        WPoly w = eng.to_wpoly(g);
        eng.normalize(w);
        basis.push_back(std::move(w));
    }
    // deterministic start: sort generators ascending
    std::stable_sort(basis.begin(), basis.end(), [&](const WPoly& a, const WPoly& b) {
        return eng.order.compare(a.lm(), b.lm(), eng.ring) < 0;
    });

    std::vector<Pair> pairs;
    auto pair_sugar = [&](std::size_t i, std::size_t j, const Monomial& l) {
        int si = basis[i].sugar + static_cast<int>(l.degree() - basis[i].lm().degree());
        int sj = basis[j].sugar + static_cast<int>(l.degree() - basis[j].lm().degree());
        return std::max(si, sj);
    };

    // Gebauer-Moeller update with the new element at index t.
    auto update_pairs = [&](std::size_t t) {
        const Monomial& lt = basis[t].lm();
        // chain criterion against surviving old pairs
        pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                                   [&](const Pair& p) {
                                       if (!lt.divides(p.lcm)) return false;
                                       Monomial lit = basis[p.i].lm().lcm(lt);
                                       Monomial ljt = basis[p.j].lm().lcm(lt);
                                       return lit != p.lcm && ljt != p.lcm;
                                   }),
                    pairs.end());
        // candidate pairs (i, t)
        struct Cand {
            std::size_t i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < t; ++i) {
            if (basis[i].is_zero()) continue;
            Monomial l = basis[i].lm().lcm(lt);
            cands.push_back({i, std::move(l), basis[i].lm().coprime_with(lt)});
        }
        // M criterion: drop candidates whose lcm is a proper multiple of another
        std::vector<bool> drop(cands.size(), false);
        for (std::size_t a = 0; a < cands.size(); ++a)
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (drop[b]) continue;
                if (cands[b].lcm != cands[a].lcm && cands[b].lcm.divides(cands[a].lcm))
                    drop[a] = true;
            }
        // F criterion: per lcm class keep one candidate, none if a class
        // member has coprime leading monomials (Buchberger's first criterion)
        std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> classes;
        for (std::size_t a = 0; a < cands.size(); ++a)
            if (!drop[a]) classes[cands[a].lcm.exponents()].push_back(a);
        for (auto& [key, members] : classes) {
            bool any_coprime = false;
            for (auto a : members)
                if (cands[a].coprime) any_coprime = true;
            if (any_coprime) continue;
            std::size_t keep = members.front();
            pairs.push_back({cands[keep].i, t, cands[keep].lcm, pair_sugar(cands[keep].i, t, cands[keep].lcm)});
        }
    };

    for (std::size_t t = 0; t < basis.size(); ++t) update_pairs(t);

    while (!pairs.empty()) {
        // sugar strategy: min sugar, then min lcm degree, then lcm order
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair& a = pairs[k];
            const Pair& b = pairs[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = k;
                continue;
            }
            int cmp = eng.order.compare(a.lcm, b.lcm, eng.ring);
            if (cmp != 0) {
                if (cmp < 0) best = k;
                continue;
            }
            if (std::tie(a.i, a.j) < std::tie(b.i, b.j)) best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + best);
        WPoly s = eng.s_polynomial(basis[p.i], basis[p.j]);
        s.sugar = std::max(s.sugar, p.sugar);
        WPoly r = eng.reduce_full(std::move(s), basis);
        if (r.is_zero()) continue;
        eng.normalize(r);
        basis.push_back(std::move(r));
        update_pairs(basis.size() - 1);
    }

    // minimal basis: drop elements whose leading monomial is divisible by
    // another surviving element's
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) {
            keep[i] = false;
            continue;
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j] || basis[j].is_zero()) continue;
            if (basis[j].lm().divides(basis[i].lm()) && basis[j].lm() != basis[i].lm()) {
                keep[i] = false;
                break;
            }
            if (basis[j].lm() == basis[i].lm() && j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<WPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // tail-reduce each element against the others and make monic
    std::vector<WPoly> reduced = minimal;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<WPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        WPoly r = eng.reduce_full(minimal[i], others);
        eng.make_monic(r);
        reduced[i] = std::move(r);
    }
    std::stable_sort(reduced.begin(), reduced.end(), [&](const WPoly& a, const WPoly& b) {
        return eng.order.compare(a.lm(), b.lm(), eng.ring) < 0;
    });
    std::vector<Polynomial> out;
    out.reserve(reduced.size());
    for (const auto& w : reduced) out.push_back(eng.to_polynomial(w, ring));
    return out;
}

Polynomial normal_form_against(const Polynomial& f, const std::vector<Polynomial>& basis,
                               const MonomialOrder& order) {
    if (f.is_zero() || basis.empty()) return f;
    Engine eng{*f.ring(), order};
    std::vector<WPoly> wb;
    wb.reserve(basis.size());
    for (const auto& g : basis) wb.push_back(eng.to_wpoly(g));
    WPoly r = eng.reduce_full(eng.to_wpoly(f), wb);
    return eng.to_polynomial(r, f.ring());
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens, MonomialOrder order)
    : ring_(std::move(ring)), order_(order) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring()->same(*ring_)) fail("ring_mismatch", "generator from a different ring");
        gens_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
    if (!cache_) fail("internal", "ideal handle without cache");
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) {
        log_debug("buchberger: ", gens_.size(), " generators, order ", order_.to_string());
        cache_->gb = std::make_shared<const std::vector<Polynomial>>(
            buchberger_reduced_basis(ring_, gens_, order_));
        log_debug("buchberger: basis size ", cache_->gb->size());
    }
    return *cache_->gb;
}

bool Ideal::basis_computed() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->gb != nullptr;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
    return normal_form_against(f, groebner_basis(), order_);
}

bool Ideal::contains_ideal(const Ideal& other) const {
    for (const auto& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::equals(const Ideal& other) const {
    if (ring_->same(*other.ring_) && order_ == other.order_)
        return groebner_basis() == other.groebner_basis();
    return contains_ideal(other) && other.contains_ideal(*this);
}

bool Ideal::is_zero_ideal() const { return groebner_basis().empty(); }

bool Ideal::is_unit_ideal() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb.front().degree() == 0;
}

bool Ideal::generators_homogeneous() const {
    for (const auto& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

Ideal Ideal::with_extra_generators(std::vector<Polynomial> more) const {
    std::vector<Polynomial> gens = gens_;
    for (auto& g : more) gens.push_back(std::move(g));
    return Ideal(ring_, std::move(gens), order_);
}

} // namespace klab

#include "klab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace klab {

namespace {

struct CanonicalLess {
    const Ring* ring;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_compare(a, b, *ring) < 0;
    }
};

} // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<Monomial, Scalar, CanonicalLess> acc{CanonicalLess{ring.get()}};
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (static_cast<int>(t.mono.nvars()) != ring->nvars)
            fail("ring_mismatch", "monomial arity does not match ring");
        if (t.coeff.field() != ring->field)
            fail("field_mismatch", "coefficient field does not match ring");
        auto it = acc.find(t.mono);
        if (it == acc.end()) {
            acc.emplace(t.mono, t.coeff);
        } else {
            it->second += t.coeff;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    Polynomial p(ring);
    p.terms_.reserve(acc.size());
    // descending canonical order
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) p.terms_.push_back({it->first, it->second});
    p.homogeneous_ = true;
    for (const auto& t : p.terms_)
        if (t.mono.degree() != p.terms_.front().mono.degree()) {
            p.homogeneous_ = false;
            break;
        }
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    std::vector<Term> ts;
    ts.push_back({Monomial(ring->nvars), c});
    return from_terms(std::move(ring), std::move(ts));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
    std::vector<Term> ts;
    ts.push_back({std::move(m), std::move(c)});
    return from_terms(std::move(ring), std::move(ts));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    return monomial(ring, Monomial::variable(ring->nvars, index), Scalar::one(ring->field));
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) fail("zero_polynomial", "leading term of zero");
    return terms_.front();
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (!ring_ || !o.ring_ || !ring_->same(*o.ring_))
        fail("ring_mismatch", "polynomials from different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    std::vector<Term> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(o);
    std::vector<Term> ts = terms_;
    ts.reserve(ts.size() + o.terms_.size());
    for (const auto& t : o.terms_) ts.push_back({t.mono, -t.coeff});
    return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    std::vector<Term> ts;
    ts.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) ts.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial::zero(ring_);
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff = t.coeff * c;
    return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial::zero(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    p.homogeneous_ = homogeneous_;
    return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
    if (!ring_->same(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var_index) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono.exponent(var_index);
        if (e == 0) continue;
        Scalar c = t.coeff * Scalar::from_int(static_cast<long>(e), ring_->field);
        ts.push_back({t.mono.with_exponent(var_index, e - 1), std::move(c)});
    }
    return from_terms(ring_, std::move(ts));
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars)
        fail("ring_mismatch", "evaluation point arity does not match ring");
    // cache powers per variable
    std::vector<std::vector<Scalar>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(Scalar::one(ring_->field));
    Scalar sum = Scalar::zero(ring_->field);
    for (const auto& t : terms_) {
        Scalar v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            std::uint32_t e = t.mono.exponent(i);
            while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * point[i]);
            if (e > 0) v = v * powers[i][e];
        }
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::dehomogenized() const {
    if (!ring_->is_projective()) fail("ring_mismatch", "dehomogenization needs a projective ring");
    auto aff = Ring::affine(ring_->nvars - 1, ring_->field);
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
        ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(std::move(aff), std::move(ts));
}

Polynomial Polynomial::homogenized() const {
    if (!ring_->is_affine()) fail("ring_mismatch", "homogenization needs an affine ring");
    auto proj = Ring::projective(ring_->nvars, ring_->field);
    int d = degree();
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e;
        e.reserve(t.mono.nvars() + 1);
        e.push_back(static_cast<std::uint32_t>(d) - t.mono.degree());
        e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
        ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(std::move(proj), std::move(ts));
}

Polynomial Polynomial::normalized() const {
    if (is_zero()) return *this;
    if (leading_coeff().is_one()) return *this;
    return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero() || !ring_->field.is_rational()) return *this;
    mpz_class den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_class d = t.coeff.rational_value().get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpz_class num_gcd = 0;
    for (const auto& t : terms_) {
        mpz_class n = t.coeff.rational_value().get_num() * (den_lcm / t.coeff.rational_value().get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd == 0) num_gcd = 1;
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    Scalar f = Scalar::rational(factor);
    if ((leading_coeff() * f).rational_value() < 0) f = -f;
    return scaled(f);
}

Polynomial Polynomial::homogeneous_component(int deg) const {
    Polynomial p(ring_);
    for (const auto& t : terms_)
        if (static_cast<int>(t.mono.degree()) == deg) p.terms_.push_back(t);
    p.homogeneous_ = true;
    return p;
}

std::vector<int> Polynomial::occurring_degrees() const {
    std::vector<int> ds;
    for (const auto& t : terms_) {
        int d = static_cast<int>(t.mono.degree());
        if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coeff.to_string();
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string abs = neg ? c.substr(1) : c;
        bool unit_coeff = abs == "1" && !t.mono.is_constant();
        if (!unit_coeff) os << abs;
        bool first_var = true;
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            std::uint32_t e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!first_var || !unit_coeff) os << "*";
            os << ring_->names[i];
            if (e > 1) os << "^" << e;
            first_var = false;
        }
        if (t.mono.is_constant() && unit_coeff) os << abs;
    }
    return os.str();
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) fail("division_by_zero", "polynomial division by zero");
    Polynomial rem = f;
    Polynomial quot = Polynomial::zero(f.ring());
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        const Term& gl = g.leading_term();
        if (!gl.mono.divides(lt.mono)) return std::nullopt;
        Monomial q = gl.mono.quotient_into(lt.mono);
        Scalar c = lt.coeff / gl.coeff;
        quot = quot + Polynomial::monomial(f.ring(), q, c);
        rem = rem - g.times_monomial(q, c);
    }
    return quot;
}

namespace {

Polynomial det_recursive(const std::vector<std::vector<Polynomial>>& mat,
                         std::vector<std::size_t> rows, std::vector<std::size_t> cols,
                         const RingPtr& ring) {
    std::size_t n = rows.size();
    if (n == 0) return Polynomial::constant(ring, Scalar::one(ring->field));
    if (n == 1) return mat[rows[0]][cols[0]];
    if (n == 2)
        return mat[rows[0]][cols[0]] * mat[rows[1]][cols[1]] -
               mat[rows[0]][cols[1]] * mat[rows[1]][cols[0]];
    // expand along the column with the most zeros
    std::size_t best = 0, best_zeros = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t z = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mat[rows[i]][cols[j]].is_zero()) ++z;
        if (j == 0 || z > best_zeros) {
            best = j;
            best_zeros = z;
        }
    }
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (j != best) sub_cols.push_back(cols[j]);
    Polynomial det = Polynomial::zero(ring);
    bool negate = best % 2 == 1;
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial& entry = mat[rows[i]][cols[best]];
        bool neg = (i % 2 == 1) != negate;
        if (!entry.is_zero()) {
            std::vector<std::size_t> sub_rows;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) sub_rows.push_back(rows[k]);
            Polynomial minor = det_recursive(mat, std::move(sub_rows), sub_cols, ring);
            Polynomial contrib = entry * minor;
            det = neg ? det - contrib : det + contrib;
        }
    }
    return det;
}

} // namespace

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& mat, const RingPtr& ring) {
    std::vector<std::size_t> idx(mat.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return det_recursive(mat, idx, idx, ring);
}

std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return {};
    RingPtr ring = gens.front().ring();
    if (!ring->is_projective()) fail("ring_mismatch", "jacobian minors need a projective ring");
    std::size_t n = static_cast<std::size_t>(ring->nvars) - 1;
    std::size_t r = gens.size();
    if (r < n) return {};
    for (const auto& g : gens)
        if (!g.is_homogeneous()) fail("not_homogeneous", "jacobian generators must be homogeneous");
    // rows i = d/dX_i for i = 1..n, columns j = generators
    std::vector<std::vector<Polynomial>> jac(n, std::vector<Polynomial>(r, Polynomial::zero(ring)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) jac[i][j] = gens[j].derivative(i + 1);

    std::vector<Polynomial> minors;
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    while (true) {
        minors.push_back(det_recursive(jac, rows, cols, ring));
        // next column combination
        std::size_t k = n;
        while (k > 0 && cols[k - 1] == r - n + k - 1) --k;
        if (k == 0) break;
        ++cols[k - 1];
        for (std::size_t j = k; j < n; ++j) cols[j] = cols[j - 1] + 1;
    }
    return minors;
}

} // namespace klab

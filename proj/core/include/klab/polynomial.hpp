#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klab/monomial.hpp"
#include "klab/order.hpp"
#include "klab/ring.hpp"
#include "klab/scalar.hpp"

namespace klab {

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Immutable sparse polynomial. Terms are kept sorted descending under the
// ring's canonical degrevlex order and never carry zero coefficients; the
// homogeneity flag is recomputed on every construction.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    // Normalizes: merges duplicate monomials, drops zeros, sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);
    static Polynomial variable(RingPtr ring, std::size_t index);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const { return homogeneous_; }
    std::size_t term_count() const { return terms_.size(); }

    // total degree; -1 for the zero polynomial
    int degree() const;

    const Term& leading_term() const;  // under the canonical order
    const Scalar& leading_coeff() const { return leading_term().coeff; }
    const Monomial& leading_monomial() const { return leading_term().mono; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial times_monomial(const Monomial& m, const Scalar& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(std::size_t var_index) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;

    // X0 := 1 (projective ring -> affine ring over the same field)
    Polynomial dehomogenized() const;
    // multiply each term by the X0 power reaching the maximal degree
    Polynomial homogenized() const;

    // monic under the canonical order
    Polynomial normalized() const;
    // over Q: integer coefficients, content 1, positive leading coefficient
    Polynomial primitive_part() const;

    // graded piece of the given total degree
    Polynomial homogeneous_component(int deg) const;
    std::vector<int> occurring_degrees() const;

    std::string to_string() const;

private:
    void check_compatible(const Polynomial& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
    bool homogeneous_ = true;
};

// Exact multivariate division: returns f/g when g divides f, nullopt
// otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

// Determinant of a square polynomial matrix by cofactor expansion along the
// sparsest column.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& mat, const RingPtr& ring);

// All n-minors of the Jacobian matrix (dF_j/dx_i), i = 1..n, of homogeneous
// generators in a projective ring. Zero and duplicate minors are retained.
std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& gens);

} // namespace klab

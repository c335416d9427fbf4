#pragma once

#include <set>

#include "klab/ideal.hpp"

namespace klab {

// Per-degree standard monomial data of a quotient ring. `finite` is set iff
// enumeration terminated on its own (0-dimensional affine quotient).
struct QuotientBasis {
    std::vector<Monomial> monomials;
    std::vector<int> per_degree;
    bool finite = false;
    int degree_cap = -1;

    int total() const { return static_cast<int>(monomials.size()); }
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

// via the t*I + (1-t)*J elimination trick on an auxiliary variable
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

// (a : g), computed as (a intersect <g>) / g
Ideal ideal_colon_single(const Ideal& a, const Polynomial& g);

// (a : b) as the intersection of the generator-wise colons
Ideal ideal_colon(const Ideal& a, const Ideal& b);

// generators of a (intersect) K[vars outside drop_vars]; same ambient ring
Ideal eliminate(const Ideal& a, const std::set<int>& drop_vars);

// (a : X0^infinity) by iterating the colon until the basis stabilizes
Ideal saturate_x0(const Ideal& a);

// Standard monomials of the quotient by a. For affine 0-dimensional ideals
// the enumeration is complete; otherwise it is capped at degree_cap.
QuotientBasis quotient_basis(const Ideal& a, int degree_cap = -1);

// all monomials of the ring with the given total degree, canonical order
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree);

} // namespace klab

#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "klab/polynomial.hpp"

namespace klab {

// A finitely generated ideal with a cached reduced Groebner basis. Handles
// are immutable values; copies share the basis cache. The cached basis is
// the unique reduced (monic, fully tail-reduced, sorted) basis for the
// generators under the handle's order, so two handles describe the same
// ideal under the same order iff their bases coincide.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens,
          MonomialOrder order = MonomialOrder::degrevlex());

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }

    const std::vector<Polynomial>& groebner_basis() const;
    bool basis_computed() const;

    // unique remainder modulo the reduced basis; zero iff f lies in the ideal
    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
    bool contains_ideal(const Ideal& other) const;
    bool equals(const Ideal& other) const;

    bool is_zero_ideal() const;
    bool is_unit_ideal() const;
    bool generators_homogeneous() const;

    Ideal with_order(MonomialOrder order) const { return Ideal(ring_, gens_, order); }
    Ideal with_extra_generators(std::vector<Polynomial> more) const;

private:
    struct Cache {
        std::mutex mu;
        std::shared_ptr<const std::vector<Polynomial>> gb;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    MonomialOrder order_ = MonomialOrder::degrevlex();
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Reduced Groebner basis of the generators; exposed for tests.
std::vector<Polynomial> buchberger_reduced_basis(const RingPtr& ring,
                                                 const std::vector<Polynomial>& gens,
                                                 const MonomialOrder& order);

// Full normal form of f against an inter-reduced (or any) basis.
Polynomial normal_form_against(const Polynomial& f, const std::vector<Polynomial>& basis,
                               const MonomialOrder& order);

} // namespace klab

#pragma once

#include "klab/monomial.hpp"
#include "klab/ring.hpp"

namespace klab {

// Term orders over a ring's variable priority list. Block orders compare a
// front block (the first `front` priority slots) by degrevlex first, which
// makes them elimination orders for those variables.
struct MonomialOrder {
    enum class Kind { Degrevlex, Lex, Block };

    Kind kind = Kind::Degrevlex;
    int front = 0;

    static MonomialOrder degrevlex() { return {Kind::Degrevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder block_elimination(int front_block_size) {
        return {Kind::Block, front_block_size};
    }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && front == o.front; }

    // negative if a < b, zero if equal, positive if a > b
    int compare(const Monomial& a, const Monomial& b, const Ring& ring) const;
    bool less(const Monomial& a, const Monomial& b, const Ring& ring) const {
        return compare(a, b, ring) < 0;
    }
    std::string to_string() const;
};

// The storage order every Polynomial uses: degrevlex over ring.priority.
int canonical_compare(const Monomial& a, const Monomial& b, const Ring& ring);

} // namespace klab

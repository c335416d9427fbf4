#pragma once

#include <memory>
#include <string>
#include <vector>

#include "klab/scalar.hpp"

namespace klab {

// Ambient polynomial ring descriptor. Projective rings have variables
// X0..Xn, affine rings X1..Xn. Scratch rings carry auxiliary variables for
// elimination and enveloping constructions.
//
// `priority` lists variable slots from most to least significant for the
// graded orders; the projective convention puts X0 last so that leading
// terms behave predictably under dehomogenization.
struct Ring {
    enum class Kind { Projective, Affine, Scratch };

    Kind kind;
    int nvars;
    FieldSpec field;
    std::vector<std::string> names;
    std::vector<int> priority;

    static std::shared_ptr<const Ring> projective(int n, FieldSpec field);
    static std::shared_ptr<const Ring> affine(int n, FieldSpec field);
    static std::shared_ptr<const Ring> scratch(std::vector<std::string> names, FieldSpec field,
                                               std::vector<int> priority = {});

    bool is_projective() const { return kind == Kind::Projective; }
    bool is_affine() const { return kind == Kind::Affine; }

    bool same(const Ring& o) const {
        return kind == o.kind && nvars == o.nvars && field == o.field && priority == o.priority;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

} // namespace klab

#pragma once

#include "klab/scheme.hpp"

namespace klab {

// A homogeneous ideal of R = P/I_X together with its Hilbert data. `ri` is
// empty exactly for the zero ideal (regularity index -infinity).
struct GradedIdealView {
    std::vector<Polynomial> gens;  // minimal homogeneous generators, monic NFs mod I_X
    std::vector<int> hf;           // values 0..ri
    int hp = 0;                    // stable value
    std::optional<int> ri;
    int affine_dim = 0;            // dimension of the dehomogenized ideal inside S
    Ideal full_ideal;              // <gens> + I_X, for membership tests

    bool is_zero() const { return !ri.has_value(); }
    bool principal() const { return gens.size() == 1; }
    int value(int d) const {
        if (d < 0 || is_zero()) return 0;
        if (d < static_cast<int>(hf.size())) return hf[d];
        return hp;
    }
    std::vector<int> prefix(int upto) const {
        std::vector<int> out;
        for (int d = 0; d <= upto; ++d) out.push_back(value(d));
        return out;
    }
};

// Hilbert data of the ideal of R generated by the given homogeneous
// polynomials (coefficients in P; they are reduced mod I_X first). Degrees
// are scanned upward until the value reaches the affine dimension; the scan
// is capped at (n+1) r_X + n (or the build's max_degree when larger) and
// failing to stabilize raises Error("stabilization_overflow").
GradedIdealView graded_ideal_view(const Scheme& scheme, std::vector<Polynomial> gens_in_p);

// Kaehler different: all n-minors of the Jacobian of the reduced Groebner
// basis of I_X (or of the stored generators when from_original_gens).
GradedIdealView kaehler_different(const Scheme& scheme, bool from_original_gens = false);

// Noether different via the enveloping algebra: lift I_X to
// K[X0,X,Y] twice, colon out the diagonal, map Y -> X.
GradedIdealView noether_different(const Scheme& scheme);

// Independent route for tests: per-degree annihilator kernels in the free
// K[x0]-module presentation of R (x) R. Returns the Hilbert values 0..upto.
std::vector<int> noether_hilbert_by_kernels(const Scheme& scheme, int upto);

struct AffineReducedKaehler {
    int affine_dim = 0;        // dim of the affine Kaehler different inside S
    bool reduced_nonzero = false;  // some minor survives mod I_X + <X0>
};
AffineReducedKaehler affine_and_reduced_kaehler(const Scheme& scheme,
                                                const GradedIdealView& kaehler);

struct LocalDifferentEntry {
    int kaehler_local_dim = 0;
    bool is_ci_point = false;
    bool is_gorenstein_point = false;
    int socle_dim = 0;  // over K
    int kappa = 0;
    int multiplicity = 0;
};

LocalDifferentEntry local_kaehler_different(const Scheme& scheme, std::size_t j,
                                            const GradedIdealView& kaehler);

struct InclusionCheck {
    bool kaehler_in_noether = false;
    bool noether_pow_in_kaehler = false;
};

InclusionCheck different_inclusions(const Scheme& scheme, const GradedIdealView& kaehler,
                                    const GradedIdealView& noether);

} // namespace klab

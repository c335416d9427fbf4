#pragma once

#include <optional>
#include <unordered_map>

#include "klab/ideal_ops.hpp"
#include "klab/matrix.hpp"

namespace klab {

long long binomial(int n, int k);

struct HilbertTable {
    std::vector<int> values;  // HF(0..i_max)
    int r_x = 0;              // regularity index of HF
    int alpha_x = 0;          // initial degree of the vanishing ideal
    int degree = 0;           // stable value

    int value(int i) const {
        if (i < 0) return 0;
        if (i < static_cast<int>(values.size())) return values[i];
        return degree;
    }
    // HF(0..upto) inclusive, for printing
    std::vector<int> prefix(int upto) const {
        std::vector<int> out;
        for (int i = 0; i <= upto; ++i) out.push_back(value(i));
        return out;
    }
};

// Degreewise coordinates of R = P/I for a homogeneous ideal I: standard
// monomials per degree and the expansion of every monomial of that degree
// over them. Built eagerly up to a cap; immutable afterwards.
class GradedCoordinates {
public:
    GradedCoordinates() = default;

    void build(const Ideal& homogeneous_ideal, int up_to_degree);
    void extend(int up_to_degree);

    int max_degree() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<Monomial>& std_monomials(int d) const;
    int hf(int d) const;
    const Vec& monomial_coords(const Monomial& m) const;
    // coordinates of the normal form of a homogeneous degree-d polynomial
    Vec coords(const Polynomial& f, int d) const;
    // coordinates of NF(f * m), deg f + deg m = d
    Vec product_coords(const Polynomial& f, const Monomial& m, int d) const;
    Polynomial from_coords(const Vec& v, int d) const;

private:
    struct Level {
        std::vector<Monomial> std_monos;
        std::unordered_map<Monomial, Vec, MonomialHash> nf;
    };

    Ideal ideal_;
    std::vector<Level> levels_;
};

// The finite-dimensional affine algebra S = K[X1..Xn]/J with its
// multiplication structure.
class AffineCoordinates {
public:
    AffineCoordinates() = default;

    void build(Ideal affine_ideal);

    const Ideal& ideal() const { return ideal_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    FieldSpec field() const { return ideal_.ring()->field; }

    Vec monomial_coords(const Monomial& m) const;
    Vec coords(const Polynomial& f) const;
    Polynomial from_coords(const Vec& v) const;

    const Matrix& basis_mult(std::size_t k) const { return basis_mult_[k]; }
    const Matrix& var_mult(std::size_t i) const { return var_mult_[i]; }
    // matrix of multiplication by the element with the given coordinates
    Matrix mult_by(const Vec& coords) const;
    Vec multiply(const Vec& a, const Vec& b) const;

    // span of the ideal generated inside S by the given elements
    EchelonSpan ideal_span(const std::vector<Vec>& gens) const;

    // minimal polynomial of x_i acting on S, as dense coefficients
    std::vector<Scalar> minimal_polynomial(std::size_t var) const;

private:
    Ideal ideal_;
    std::vector<Monomial> basis_;
    std::unordered_map<Monomial, int, MonomialHash> basis_index_;
    std::vector<Matrix> basis_mult_;
    std::vector<Matrix> var_mult_;
    mutable std::unordered_map<Monomial, Vec, MonomialHash> nf_cache_;
};

// squarefree part of a dense univariate polynomial (exact field, separable)
std::vector<Scalar> squarefree_part(const std::vector<Scalar>& poly);
bool is_squarefree(const std::vector<Scalar>& poly);

// Local ring O_j = S/q_j of one component, with maximal ideal, socle and a
// lifted residue-field basis.
struct LocalRing {
    AffineCoordinates algebra;                    // quotient by q_j
    std::vector<Polynomial> maximal_ideal_gens;   // affine generators of m_j
    EchelonSpan maximal_ideal;                    // m_j as a subspace
    EchelonSpan socle;                            // Ann(m_j)
    std::vector<std::size_t> residue_cols;        // unit coordinates lifting K(p_j)
    int multiplicity = 0;                         // dim O_j
    int kappa = 0;                                // dim K(p_j)
    bool reduced = false;
    bool gorenstein = false;

    // deterministic socle generator: smallest-pivot row of the echelon basis
    Vec socle_generator() const;
    // e_jk lifted residue basis vectors
    std::vector<Vec> residue_basis() const;
};

struct Component {
    std::optional<std::vector<Scalar>> coords;  // projective, normalized to X0 = 1
    std::vector<Polynomial> given_homogeneous;  // as supplied / derived
    Ideal primary_homogeneous;                  // saturated
    Ideal primary_affine;
    LocalRing local;
};

struct ComponentInput {
    std::optional<std::vector<Scalar>> point;    // n+1 projective coordinates
    std::vector<std::string> primary_gens;       // polynomial strings
};

struct BuildOptions {
    int max_degree = -1;   // extends the analysis cap when larger
    int threads = 1;
    bool cross_check = false;
};

// A validated 0-dimensional subscheme of P^n with no support on {X0 = 0}.
class Scheme {
public:
    static Scheme from_components(FieldSpec field, int n, const std::vector<ComponentInput>& inputs,
                                  const BuildOptions& options = {});
    static Scheme from_ideal(FieldSpec field, int n, std::vector<Polynomial> homogeneous_gens,
                             const BuildOptions& options = {});

    FieldSpec field() const { return field_; }
    int n() const { return n_; }
    int degree() const { return degree_; }
    const RingPtr& proj_ring() const { return proj_ring_; }
    const RingPtr& aff_ring() const { return aff_ring_; }
    const Ideal& ideal() const { return ideal_; }              // I_X
    const Ideal& affine_ideal() const { return affine_ideal_; }  // J_X
    const HilbertTable& hilbert() const { return hilbert_; }
    const GradedCoordinates& graded() const { return graded_; }
    const AffineCoordinates& algebra() const { return algebra_; }

    bool has_components() const { return !components_.empty(); }
    const std::vector<Component>& components() const { return components_; }
    const LocalRing& local_ring(std::size_t j) const;

    bool is_reduced() const { return reduced_; }
    // dim of S modulo its nilradical = sum of the residue field degrees
    int residue_dimension() const { return s_red_dim_; }
    const std::vector<Polynomial>& radical_gens() const { return radical_gens_affine_; }

    // CRT projections S -> O_j and the inverse of the stacked map
    Vec project(std::size_t j, const Vec& s_coords) const;
    Vec embed(const std::vector<Vec>& per_component) const;

    // degree cap the graded tables were built to
    int table_cap() const { return graded_.max_degree(); }
    const std::vector<std::string>& warnings() const { return warnings_; }
    const BuildOptions& options() const { return options_; }

    bool generic_position() const;
    // generic with degree hitting the lower binomial bound exactly
    enum class GenericBoundary { AtBinomialBound, StrictlyBetween, NotGeneric };
    GenericBoundary generic_boundary() const;

private:
    Scheme() = default;
    void finalize(const BuildOptions& options);
    void compute_crt();

    FieldSpec field_;
    int n_ = 0;
    int degree_ = 0;
    RingPtr proj_ring_, aff_ring_;
    Ideal ideal_, affine_ideal_;
    HilbertTable hilbert_;
    GradedCoordinates graded_;
    AffineCoordinates algebra_;
    std::vector<Component> components_;
    std::vector<Matrix> projections_;
    Matrix crt_inverse_;
    bool reduced_ = false;
    int s_red_dim_ = 0;
    std::vector<Polynomial> radical_gens_affine_;
    std::vector<std::string> warnings_;
    BuildOptions options_;
};

} // namespace klab

#pragma once

#include <map>

#include "klab/differents.hpp"

namespace klab {

// Degreewise matrices of the injection R_i -> S sending the class of a
// standard monomial to its dehomogenization, together with the image flag
// V_0 <= V_1 <= ... <= V_{r_X} = S.
class GradedEmbedding {
public:
    explicit GradedEmbedding(const Scheme& scheme);

    const Scheme& scheme() const { return *scheme_; }
    int r_x() const { return scheme_->hilbert().r_x; }
    const Matrix& matrix(int i) const;
    const EchelonSpan& image(int i) const;  // V_min(i, r_X)

    bool image_contains(const Vec& s_coords, int i) const;
    // least i with the vector in V_i; always <= r_X
    int min_degree_containing(const Vec& s_coords) const;
    // unique preimage in R_i of a vector lying in V_i
    Polynomial preimage(const Vec& s_coords, int i) const;

private:
    const Scheme* scheme_;
    std::vector<Matrix> matrices_;
    std::vector<EchelonSpan> images_;
};

// least i such that the element (0,..,a,..,0) x0^i of S[x0] comes from R_i;
// `local_element` holds coordinates in O_j
int mu_value(const GradedEmbedding& embedding, std::size_t j, const Vec& local_element);

struct SeparatorSet {
    std::vector<Polynomial> minimal;  // f*_jk, degrees mu(e_jk s_j)
    std::vector<int> degrees;
    std::vector<Polynomial> full;     // f_jk = x0^{r_X - mu} f*_jk
};

// Separators of the maximal p_j-subscheme attached to the deterministic
// socle choice. Requires a Gorenstein component.
SeparatorSet separators(const GradedEmbedding& embedding, std::size_t j);

struct ConductorProfile {
    std::vector<int> dims;                 // dim F_i, i = 0..r_X
    std::vector<std::vector<Vec>> bases;   // echelon bases of the F_i
    long long len_tilde_over_r = 0;        // l(R~ / R)
    long long len_r_over_f = 0;            // l(R / F)
    long long len_tilde_over_f = 0;        // l(R~ / F)
    std::vector<int> point_degrees;        // deg_X(p_j); empty without components
};

// Degreewise conductor F_i = { v in S : v S <= V_i } with lengths and the
// componentwise initial degrees.
ConductorProfile conductor(const GradedEmbedding& embedding);

struct CbResult {
    bool is_cb = false;
    std::vector<int> point_degrees;
};
CbResult cb_test(const GradedEmbedding& embedding, const ConductorProfile& profile);

struct CbRankCriterion {
    bool sufficient_cb = false;
    std::size_t rank_plain = 0;
    std::vector<std::size_t> rank_augmented;
    int t = 0;       // dim (I_X)_alpha
    int delta = 0;   // number of minors
};

// Evaluation-rank test on the degree-alpha Jacobian minors; hypotheses
// (reduced rational points, generic position, r_X = alpha_X >= 2, t >= n)
// are validated and violations throw Error("hypothesis_violation", ...).
CbRankCriterion cb_rank_criterion(const Scheme& scheme);

struct GenPosEquivalence {
    bool generic_at_bound = false;      // generic with deg = C(n+alpha-1, n)
    bool kaehler_tail_form = false;     // HF(theta) = 0 below n r_X, deg above
    bool cb_and_conductor_power = false;  // CB and theta = F^n
    bool consistent = false;
    std::optional<bool> hf_criterion_low_degree;  // generic <=> HF(theta)(n a - n - 1) = 0
};

GenPosEquivalence genpos_equivalence_check(const Scheme& scheme, const GradedIdealView& kaehler,
                                           const GradedEmbedding& embedding,
                                           const ConductorProfile& profile,
                                           bool assume_grid_hypotheses = false);

struct ClassificationReport {
    bool is_generic = false;
    std::string boundary_case;  // "degree_at_binomial_bound" | "strictly_between" | "none"
    bool is_cb = false;
    std::vector<int> point_degrees;
    bool is_locally_gorenstein = false;
    bool is_arith_gorenstein = false;
    std::map<std::string, bool> ag_routes;
    bool is_locally_ci = false;
    bool is_ci = false;
    std::map<std::string, bool> ci_routes;
    int ci_witness_hf_kaehler_rx = 0;
    long long len_tilde_over_r = 0;
    long long len_r_over_f = 0;
    std::vector<LocalDifferentEntry> local_entries;
    std::vector<std::string> consistency_failures;
    std::vector<std::string> notes;
};

// Runs every classification route whose preconditions hold and records
// cross-route disagreements; with cross_check also the inclusion chain and
// the generator-set independence of the Kaehler different.
ClassificationReport classify(const Scheme& scheme, const GradedIdealView& kaehler,
                              const GradedIdealView& noether, const GradedEmbedding& embedding,
                              const ConductorProfile& profile, bool cross_check = false);

} // namespace klab

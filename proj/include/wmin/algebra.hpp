#pragma once

#include <utility>
#include <vector>

#include "wmin/linalg.hpp"
#include "wmin/radical.hpp"
#include "wmin/roots.hpp"
#include "wmin/spec.hpp"

namespace wmin {

/* Sparse vector over an algebra basis: (index, coefficient) pairs sorted by
   index, zero coefficients dropped. */
using SVec = std::vector<std::pair<int, RadicalScalar>>;

SVec sv_unit(int index);
SVec sv_unit(int index, RadicalScalar coeff);
SVec sv_add(const SVec& a, const SVec& b);
SVec sv_sub(const SVec& a, const SVec& b);
SVec sv_scale(const SVec& v, const RadicalScalar& c);
SVec sv_conj(const SVec& v);
bool sv_is_zero(const SVec& v);

/*
 * A basic Lie superalgebra presented by exact structure constants on a
 * weight basis.  The basis lists the Cartan slots first (slot j carries the
 * coroot of the j-th simple root; in psl(2|2) the first and third coroot
 * coincide, so the third simple root shares slot 0 via coroot_slot), then
 * one root vector per entry of datum.all_roots in catalog order.
 *
 * table holds [b_i, b_j] for i <= j only; the transposed bracket follows
 * from super anticommutativity.  The invariant form is normalized so that
 * (X_a | X_{-a}) = 1 for every positive root a and (h_i | h_j) =
 * (alpha_i | alpha_j).
 */
struct SuperLieAlgebra {
    RootDatum datum;
    int dim = 0;
    int n_cartan = 0;
    std::vector<bool> odd;         /* parity per basis index */
    std::vector<int> root_of;      /* basis index -> all_roots index, -1 on Cartan */
    std::vector<int> vec_of_root;  /* all_roots index -> basis index */
    std::vector<int> coroot_slot;  /* simple index -> Cartan slot of its coroot */
    std::vector<SVec> table;       /* dim*dim entries, filled for i <= j */
    Mat<RadicalScalar> form;

    int root_vec(int root_index) const { return vec_of_root[root_index]; }
    const Root& root_at(int basis_index) const { return datum.all_roots[root_of[basis_index]]; }

    const SVec& bracket_basis(int i, int j) const { return table[i * dim + j]; }
    SVec bracket(int i, int j) const;
    SVec bracket(const SVec& a, const SVec& b) const;
    RadicalScalar form_pair(const SVec& a, const SVec& b) const;

    /* coroot of any vector in the root lattice, as a Cartan sparse vector */
    SVec coroot(const Vec& r) const;
};

/* dispatch: matrix models for sl/psl/spo/osp, Chevalley-style generation
   from the simple-root data for D(2,1;a), F(4), G(3) */
SuperLieAlgebra build_algebra(const AlgebraSpec& spec);

SuperLieAlgebra matrix_model_algebra(const AlgebraSpec& spec);
SuperLieAlgebra contragredient_algebra(const AlgebraSpec& spec);

/*
 * Matrix presentation for the families that admit one (sl(2|m), psl(2|2),
 * spo(2|m), osp(4|m)); throws UnsupportedFamily otherwise.  matrices[i] is
 * the block matrix realizing basis element i of matrix_model_algebra(spec),
 * and the invariant form is (A|B) = form_scale * str(A B).  For psl(2|2)
 * the matrices are canonical sl(2|2) representatives with last diagonal
 * entry zero.
 */
struct MatrixModel {
    AlgebraSpec spec;
    int n_even = 0;
    int n_total = 0;
    Rational form_scale;
    std::vector<Mat<RadicalScalar>> matrices;
    std::vector<bool> odd;
    bool quotient_by_identity = false;
};
MatrixModel matrix_realization(const AlgebraSpec& spec);

/* exhaustive checks used by the test suites and the verify subcommands;
   each throws ConstructionFailure naming the first violated instance */
void check_super_jacobi(const SuperLieAlgebra& alg);
void check_form_properties(const SuperLieAlgebra& alg);
void check_weight_structure(const SuperLieAlgebra& alg);

/* eigenvalue of the quadratic Casimir built from form-dual bases; throws
   ConsistencyFailure unless it acts as the same scalar on every basis
   vector (the scalar equals twice the dual Coxeter number) */
Rational casimir_scalar(const SuperLieAlgebra& alg);

/*
 * A conjugation datum lambda assigns to each simple root a nonzero scalar,
 * real on even simple roots and purely imaginary on odd ones; lambda_zero
 * is the distinguished choice -sgn(alpha_i|alpha_i) on even and sqrt(-1)
 * on odd simple roots, except that an even simple root equal to the
 * highest root (the purely even degenerate member) gets +1 to keep the
 * split direction.
 */
struct Lambda {
    std::vector<RadicalScalar> lam;
};
Lambda lambda_zero(const SuperLieAlgebra& alg);

/*
 * Root vectors rescaled so that the conjugate-linear map omega determined
 * by lambda acts as omega(Y_a) = t_a Y_{-a} with
 *   t_a = -sigma_a xi_a lambda_a,
 *   sigma_a = -1 iff a is odd negative, xi_a = sgn(a|a) on even roots and 1
 *   on odd ones, lambda_a = prod_i (-xi_{alpha_i} lambda_i)^{n_i} for
 *   a = sum n_i alpha_i.
 * The rescale factors satisfy |c_a|^2 = t_a / w_a with w the raw omega
 * coefficient; when that ratio fails to be a positive rational the family
 * admits no such basis and NormalizationFailure is thrown.
 */
struct RootVectorBasis {
    SuperLieAlgebra alg;                    /* table in the rescaled basis */
    Lambda lambda;
    std::vector<RadicalScalar> rescale;     /* per basis index, Y_a = c_a X_a */
    std::vector<RadicalScalar> t;           /* omega(Y_a) = t_a Y_{-a} */
    std::vector<int> sigma;                 /* per root index */
    std::vector<int> xi;                    /* per root index */
    std::vector<RadicalScalar> lambda_root; /* lambda_a per root index */
};
RootVectorBasis good_choice(const SuperLieAlgebra& alg, const Lambda& lambda);

/* raw omega coefficients w_a per root index: omega(X_a) = w_a X_{-a};
   throws BadLambda on zero entries or wrong reality */
std::vector<RadicalScalar> omega_root_coeffs(const SuperLieAlgebra& alg, const Lambda& lambda);

/* coefficient of X_{a+b} in [X_a, X_b]; throws NotARoot unless a, b and
   a+b are all roots */
RadicalScalar structure_constant(const SuperLieAlgebra& alg, const Vec& a, const Vec& b);
inline RadicalScalar structure_constant(const RootVectorBasis& basis, const Vec& a, const Vec& b) {
    return structure_constant(basis.alg, a, b);
}

}  // namespace wmin

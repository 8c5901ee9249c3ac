#pragma once

#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/linalg.hpp"
#include "wmin/radical.hpp"
#include "wmin/roots.hpp"

namespace wmin {

/* Conjugate-linear map v -> M * conj(v), where conj conjugates the
   coefficients of v over the algebra basis. */
struct ConjugateLinearMap {
    Mat<RadicalScalar> m;
    SVec apply(const SVec& v) const;
};

/* Verifies M conj(M) = id (NotInvolution otherwise), bracket compatibility
   phi[a,b] = [phi a, phi b], and conj((phi a|phi b)) = (a|b) on all basis
   pairs (ConsistencyFailure). */
void check_involution(const SuperLieAlgebra& alg, const ConjugateLinearMap& phi);

/* The conjugate-linear involution determined by lambda on the rescaled
   basis: h -> -h on the Cartan and Y_a -> t_a Y_{-a} on root vectors. */
ConjugateLinearMap omega_involution(const RootVectorBasis& basis, const Lambda& lambda);

struct Sl2Triple {
    SVec e, x, f;
};

/*
 * The distinguished involution built from lambda_zero together with the
 * highest-root sl2 triple
 *   x = (i/2)(Y_th - Y_{-th}),
 *   e = (1/2)(Y_th + Y_{-th} + i h_th),
 *   f = (1/2)(Y_th + Y_{-th} - i h_th),
 * satisfying [x,e] = e, [x,f] = -f, [e,f] = 2x and (x|x) = 1/2.  The
 * returned map fixes e, x, f, and the Killing form of every simple
 * component of the centralizer is negative definite on the fixed real
 * points; CompactnessFailure reports any violation with a witness.
 */
struct AlmostCompactData {
    RootVectorBasis basis;
    ConjugateLinearMap phi;
    Sl2Triple triple;
};
AlmostCompactData almost_compact(const SuperLieAlgebra& alg);

/*
 * Exact eigenspace decomposition of ad x with eigenvalues -1, -1/2, 0,
 * 1/2, 1 (in that index order).  g_natural is the centralizer of the
 * triple inside the zero eigenspace: the Cartan kernel of theta followed
 * by the root vectors orthogonal to theta.
 */
struct GradedDecomposition {
    std::vector<std::vector<SVec>> eigenspaces;
    std::vector<SVec> g_natural;
};
GradedDecomposition minimal_grading(const SuperLieAlgebra& alg, const Sl2Triple& t);

/*
 * One ideal of the centralizer subalgebra: either its center or a simple
 * component given by a connected cluster of roots orthogonal to theta.
 * Components are ordered center first, then ascending (dim, rank); ties
 * are broken by the descending largest simple-root index appearing in the
 * cluster, which pins the order of equal-rank pairs.
 */
struct Component {
    bool is_center = false;
    std::vector<int> roots;    /* all_roots indices, empty for the center */
    std::vector<SVec> cartan;  /* coroot span, or the center itself */
    int dim = 0;
    int rank = 0;
    Vec theta_i;               /* internal highest root, empty for center */
    Rational u;                /* (theta_i|theta_i); 2 by convention for the center */
};
std::vector<Component> component_split(const SuperLieAlgebra& alg,
                                       const GradedDecomposition& grading);

/* Real basis of the phi-fixed points spanned by a component:
   {i h, Y_a + t_a Y_{-a}, i (Y_a - t_a Y_{-a})}. */
std::vector<SVec> fixed_real_basis(const RootVectorBasis& basis, const Component& comp);

/* Gram matrix of tr(ad u . ad v) with ad restricted to the span. */
Mat<RadicalScalar> killing_matrix(const SuperLieAlgebra& alg, const std::vector<SVec>& span);

/* Throws CompactnessFailure naming a combination of span vectors whose
   Killing norm is nonnegative; returns normally when negative definite. */
void check_negative_definite(const Mat<RadicalScalar>& gram);

/* z-degree per basis index under the short grading of the type I families
   (0 on even vectors, +-1 on odd ones); NotTypeI otherwise. */
std::vector<int> short_grading(const SuperLieAlgebra& alg);

/* Linear automorphism: identity on degree 0, lambda on degree +1,
   lambda^{-1} on degree -1; NotTypeI / BadParameter on invalid input. */
Mat<RadicalScalar> delta_automorphism(const SuperLieAlgebra& alg, const RadicalScalar& lambda);

/*
 * Dimension of the space of conjugate-linear maps on the -1/2 eigenspace
 * that intertwine the centralizer action twisted by phi; equals 1 exactly
 * when the involution is unique up to sign there, and the generator is
 * checked to be proportional to phi's restriction (ConsistencyFailure
 * otherwise).
 */
int half_space_intertwiners(const SuperLieAlgebra& alg, const ConjugateLinearMap& phi,
                            const GradedDecomposition& grading,
                            const std::vector<Component>& components);

}  // namespace wmin

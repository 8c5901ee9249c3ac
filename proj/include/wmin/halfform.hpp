#pragma once

#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/involution.hpp"
#include "wmin/linalg.hpp"
#include "wmin/radical.hpp"

namespace wmin {

/*
 * Distinguished bases of the -1/2 eigenspace, indexed by the positive odd
 * roots in catalog order:
 *   u_a = X_a + i N_{-theta,a} X_{a-theta},
 *   v_a = (1/2)(u_a - phi(u_a)) + (i/2)(u_a + phi(u_a)).
 * r_basis spans r = {u : phi(u) = -u}, computed independently as the real
 * kernel of (phi + id) on the eigenspace; its real span must agree with
 * the span of the v_a.
 */
struct HalfSpaceBasis {
    std::vector<int> alpha;              /* all_roots indices, positive odd */
    std::vector<RadicalScalar> n_theta;  /* N_{-theta,a} per position */
    std::vector<SVec> u;
    std::vector<SVec> v;
    std::vector<SVec> r_basis;
};

/* <u,v> = (e|[u,v]) on the -1/2 eigenspace; WrongGrade unless both
   arguments satisfy [x, .] = -(1/2)(.). */
RadicalScalar half_pair(const SuperLieAlgebra& alg, const Sl2Triple& t, const SVec& a,
                        const SVec& b);

/*
 * Builds the u and v bases and certifies, for every positive odd root a
 * (IdentityFailure names the first violated equation):
 *   N_{-theta,a}^2 = 1
 *   N_{-theta,a} N_{theta,a-theta} = 1
 *   N_{-theta,a} N_{-theta,theta-a} = 1
 *   [x, u_a] = -(1/2) u_a
 *   [e, u_a] = i X_a + N_{-theta,a} X_{a-theta}
 *   phi(u_a) = N_{-theta,a} u_{theta-a}
 *   <u_a, u_b> = -(N_{-theta,a} + N_{-theta,b}) delta_{theta-a,b}
 *   phi(v_a) = -v_a
 */
HalfSpaceBasis half_basis(const RootVectorBasis& basis, const ConjugateLinearMap& phi,
                          const Sl2Triple& t, const GradedDecomposition& grading);

/* Gram matrix of <.,.> on the v basis; all entries must be rational and
   the matrix must be twice the identity, otherwise PositivityFailure
   reports the offending 2x2 minor. */
Mat<RadicalScalar> gram_on_r(const SuperLieAlgebra& alg, const Sl2Triple& t,
                             const HalfSpaceBasis& hb);

}  // namespace wmin

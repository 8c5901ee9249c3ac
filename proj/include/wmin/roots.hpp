#pragma once

#include <vector>

#include "wmin/linalg.hpp"
#include "wmin/rational.hpp"
#include "wmin/spec.hpp"

namespace wmin {

/* coordinate vector over the epsilon/delta basis of the weight space */
using Vec = std::vector<Rational>;

struct Root {
    Vec v;
    bool odd = false;
};

/*
 * Full root data of one catalog member: the bilinear form normalized by
 * (theta|theta) = 2, the distinguished simple system, and the complete
 * root list with parities.  Roots are ordered by height (sum of
 * simple-root coefficients), ties broken lexicographically by the
 * coefficient vector, so all_roots runs from -theta up to theta.
 */
struct RootDatum {
    AlgebraSpec spec;
    int coordinate_dim = 0;
    Mat<Rational> gram;
    std::vector<Root> simple_roots;
    std::vector<Root> all_roots;
    std::vector<Root> positive_roots;
    Vec theta;

    /*
     * cartan_dim counts the Cartan basis slots used downstream; for
     * psl(2|2) the root spaces are separated with the pgl(2|2) Cartan
     * (3-dimensional) while the algebra's own Cartan is 2-dimensional.
     */
    int cartan_dim = 0;
    int algebra_cartan_dim = 0;

    Rational form(const Vec& x, const Vec& y) const;
    std::vector<Rational> simple_coords(const Vec& r) const;
    Rational height(const Vec& r) const;
    bool is_positive(const Vec& r) const;
    int root_index(const Vec& r) const;
    int positive_index(const Vec& r) const;

    /* left inverse of the simple-root column matrix, set by root_system */
    Mat<Rational> simple_solver;
};

RootDatum root_system(const AlgebraSpec& spec);

/*
 * (theta|theta)/2 + (rho|theta) with rho the even half-sum minus the odd
 * half-sum over the positive set; cross-checked against the closed
 * per-family value.  Throws ConsistencyFailure on disagreement.
 */
Rational dual_coxeter(const RootDatum& datum);

/* rank + #even roots - #odd roots, with the psl(2|2) adjustment */
long superdimension(const RootDatum& datum);

}  // namespace wmin

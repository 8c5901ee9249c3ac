#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/involution.hpp"
#include "wmin/poly.hpp"
#include "wmin/rational.hpp"
#include "wmin/roots.hpp"
#include "wmin/spec.hpp"

namespace wmin {

/*
 * Level data of one ideal of the centralizer (index 0 is the center when
 * present):
 *   u = (theta_i|theta_i) in the ambient form, 2 by convention for the
 *       center,
 *   hbar = half the eigenvalue of the component's Casimir element, taken
 *       with respect to the restricted ambient form, acting on the
 *       component (0 for the center),
 *   chi = (h_dual - hbar)/u,
 *   z(k) = (2/u)(k + (h_dual - hbar)/2) = (2/u) k + chi.
 * hbar is computed two independent ways: as u/2 times the component's
 * standard dual Coxeter number 1 + (2/u)(rho_i|theta_i), and through the
 * exact Casimir action on every component basis vector; disagreement
 * raises ConsistencyFailure.
 */
struct ComponentLevels {
    bool is_center = false;
    std::string label;  /* "sl_4", "sp_6", "so_7", "G_2", "C varpi" */
    int dim = 0;
    int rank = 0;
    Rational u;
    Rational hbar;
    Rational chi;
    LevelPolynomial z;
};

/*
 * Everything level classification needs about one algebra, built once:
 * the almost compact involution pipeline, per-component level data, the
 * monic collapsing polynomial, and the spans backing the beta/alpha
 * forms.  Throws AbelianGNatural when the centralizer has no simple
 * component (spo(2|m) with m <= 2).
 */
struct WData {
    AlgebraSpec spec;
    Rational h_dual;
    long sdim = 0;
    AlmostCompactData data;
    GradedDecomposition grading;
    std::vector<Component> comps;
    std::vector<ComponentLevels> levels;
    LevelPolynomial p;  /* monic; z_1 z_2 for two ideals, else z_1 (k + hbar_1/2 + 1) */

    /* component spans concatenated (cartan slice then root vectors),
       block i at [comp_offset[i], comp_offset[i+1]) */
    std::vector<SVec> gn_span;
    std::vector<size_t> comp_offset;
    Mat<RadicalScalar> gn_gram_inv;
    /* x followed by gn_span, with the Killing matrix of that span */
    std::vector<SVec> g0_span;
    Mat<RadicalScalar> g0_gram_inv;
    Mat<RadicalScalar> g0_killing;
};
WData w_data(const AlgebraSpec& spec);

/*
 * beta_k(a,b) = sum_i (k + (h_dual - hbar_i)/2)(a_i|b_i) over the
 * component pieces of a and b; defined on the centralizer only
 * (WrongSubspace otherwise).  Equals z_i(k) (a|b)^nat on component i.
 */
RadicalScalar beta_form(const WData& wd, const Rational& k, const SVec& a, const SVec& b);

/*
 * alpha_k(a,b) = (k + h_dual)(a|b) - (1/2) kappa(a,b) with kappa the
 * Killing form of the zero eigenspace computed from structure constants;
 * defined on C x + centralizer (WrongSubspace otherwise).  Equals
 * (z_i(k) + chi_i)(a|b)^nat on component i and (k + h_dual)(a|b) on C x.
 */
RadicalScalar alpha_form(const WData& wd, const Rational& k, const SVec& a, const SVec& b);

/* (a|b)^nat on component i: (u_i/2) times the ambient restriction for a
   simple component, the plain restriction for the center; WrongSubspace
   unless both arguments lie in component i. */
RadicalScalar natural_form(const WData& wd, int comp_index, const SVec& a, const SVec& b);

/* the monic collapsing polynomial; its roots are the collapsing levels */
LevelPolynomial collapsing_poly(const WData& wd);

/* c(k) = k d/(k + h_dual) - 6k + h_dual - 4 with d the superdimension */
LevelRationalFunction central_charge(const AlgebraSpec& spec);
/* exact evaluation; PoleAtLevel at k = -h_dual */
Rational central_charge_at(const AlgebraSpec& spec, const Rational& k);

/*
 * Certifies the rewriting
 *   c(k) = 7 h_dual + d - 4 - 12 r - 6 (k + h_dual - r)^2/(k + h_dual),
 *   r^2 = d h_dual / 6,
 * as an exact rational-function identity: the coefficient of r collects
 * to zero (checked together with its square) and the remaining rational
 * part equals c(k).  ConsistencyFailure otherwise.
 */
void check_charge_rewriting(const AlgebraSpec& spec);

/* d h_dual / 6, the constant in (k1 + h_dual)(k2 + h_dual) = d h_dual/6 */
Rational partner_product(const AlgebraSpec& spec);

/*
 * The second level with the same central charge:
 *   k' = -h_dual + (d h_dual/6)/(k + h_dual).
 * PoleAtLevel at k = -h_dual, ZeroProduct when d h_dual = 0 (the charge
 * is affine-degenerate), SelfPartner when k' = k.
 */
Rational partner_level(const AlgebraSpec& spec, const Rational& k);

enum class VerdictKind {
    ExcludedLevel,
    Trivial,
    CollapsingUnitary,
    CollapsingNonUnitary,
    UnitaryNontrivial,
    NonUnitary,
};
const char* verdict_name(VerdictKind kind);

struct UnitarityVerdict {
    VerdictKind kind = VerdictKind::NonUnitary;
    bool has_charge = false;  /* false only at the excluded level */
    Rational c;
    std::string target;            /* collapse target, empty otherwise */
    std::vector<Rational> z_values; /* z_i(k) per component */
};

/*
 * Decision tree at level k:
 *   k = -h_dual                          -> ExcludedLevel,
 *   centralizer simple and z_1(k) = 0    -> Trivial (W = C),
 *   p(k) = 0                             -> the W-algebra collapses to
 *     the tensor product of V_{z_i}(component_i) over the nonzero z_i
 *     ("C" when all vanish, "M(C varpi)" for the center alone); the
 *     collapse is unitary exactly when every nonzero z_i on a simple
 *     component is a positive integer,
 *   centralizer semisimple, z_i(k) in Z_+ -> UnitaryNontrivial,
 *   otherwise                             -> NonUnitary.
 */
UnitarityVerdict classify_level(const WData& wd, const Rational& k);

/* unitary and different from C: UnitaryNontrivial, or a collapse onto a
   nontrivial unitary affine target */
bool nontrivial_unitary(const UnitarityVerdict& verdict);

/*
 * The first `count` levels (with central charges) at which the simple
 * minimal W-algebra is nontrivial unitary, in descending level order:
 *   sl(2|m):    k = -1,
 *   psl(2|2):   k = -(n+1),          n = 1, 2, ...
 *   spo(2|3):   k = -(n+2)/4,
 *   spo(2|m):   k = -(n+1)/2,        m > 3,
 *   D(2,1;a):   a = -p/q in lowest terms in (-1,0):
 *               k = -p(q-p)t/q,      t = 1, 2, ... (t >= 2 when q = 2),
 *   F(4):       k = -2(n+1)/3,
 *   G(3):       k = -3(n+1)/4.
 * Every candidate is re-validated through classify_level.  EmptySet for
 * osp(4|m) and for D(2,1;a) with a outside (-1,0).
 */
std::vector<std::pair<Rational, Rational>> unitary_levels(const WData& wd, int count);

/*
 * Central charge of the classical unitary series at k = 1/p - 1:
 *   n = 0:  1 - 6/(p(p+1)),
 *   n = 1:  (3/2)(1 - 8/(p(p+2))),
 *   n = 2:  3(1 - 2/p),
 * for p >= 2; BadParameter otherwise.
 */
Rational classical_series(int n, long p);

/* 4 <u,v> p(k) with <.,.> the pairing (e|[u,v]) on the -1/2 eigenspace;
   WrongSubspace unless both arguments lie in that eigenspace */
RadicalScalar g_self_bracket_constant(const WData& wd, const Rational& k, const SVec& u,
                                      const SVec& v);

/* Certifies that z_i(k) >= 0 for all simple components forces
   k + h_dual <= 0, with equality only at the excluded level; throws
   ConsistencyFailure with a witness level otherwise. */
void check_unitarity_bound(const WData& wd);

/*
 * One mismatch between a computed value and the value printed in the
 * source table or proof text.  The regeneration is expected to produce
 * exactly two of these across the whole catalog:
 *   G(3):    printed u_1 = -2/3, computed -3/2,
 *   sl(2|m): printed collapsing level -m/2-1, computed m/2-1.
 */
struct Table2Flag {
    std::string family;  /* symbolic row label, e.g. "sl(2|m)" */
    std::string item;
    std::string printed;
    std::string computed;
};

/* Regenerates the printed table row for wd.spec and returns every
   mismatch; all other columns (h_dual, component shapes, u, hbar, z,
   chi, collapsing levels) must agree exactly or the mismatch is
   reported here. */
std::vector<Table2Flag> table2_flags(const WData& wd);

}  // namespace wmin

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/involution.hpp"
#include "wmin/linalg.hpp"
#include "wmin/radical.hpp"
#include "wmin/rational.hpp"

namespace wmin {

/*
 * Polynomial in one even variable t and four odd variables xi_1..xi_4 with
 * RadicalScalar coefficients.  A monomial is stored as (t power, subset
 * mask) where bit i-1 of the mask marks a factor xi_i, written in
 * increasing index order; the odd variables anticommute and square to
 * zero.  The weighted degree is deg' = 2*(t power) + |subset|, and the
 * contact grading is deg = deg' - 2.
 */
class ContactElement {
public:
    /* key = (t power, xi subset mask) */
    using TermMap = std::map<std::pair<int, unsigned>, RadicalScalar>;

    ContactElement() = default;

    static ContactElement one();
    static ContactElement t();
    static ContactElement xi(int i); /* i in 1..4 */
    static ContactElement monomial(int tpow, unsigned mask, const RadicalScalar& coeff);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /* 0 or 1; all monomials must agree (ConsistencyFailure otherwise,
       including on the zero element which has no parity). */
    int parity() const;
    /* common weighted degree of all monomials; ConsistencyFailure when the
       element is zero or inhomogeneous */
    int deg_prime() const;

    ContactElement conj() const; /* coefficient-wise complex conjugation */

    ContactElement operator-() const;
    ContactElement& operator+=(const ContactElement& o);
    ContactElement& operator-=(const ContactElement& o);
    friend ContactElement operator+(ContactElement a, const ContactElement& b) { return a += b; }
    friend ContactElement operator-(ContactElement a, const ContactElement& b) { return a -= b; }
    friend ContactElement operator*(const ContactElement& a, const ContactElement& b);
    friend ContactElement operator*(const RadicalScalar& c, const ContactElement& a);

    friend bool operator==(const ContactElement& a, const ContactElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ContactElement& a, const ContactElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    void add_term(int tpow, unsigned mask, const RadicalScalar& coeff);

    TermMap terms_;
};

/*
 * {f,g} = (2 - sum_i xi_i d_i)f . d_t g - d_t f . (2 - sum_i xi_i d_i)g
 *         + sum_i (-1)^{p(f)} d_i f . d_i g
 * extended bilinearly from parity-homogeneous arguments; d_i is the left
 * derivative by xi_i.
 */
ContactElement contact_bracket(const ContactElement& f, const ContactElement& g);

/* hat(xi_i) = (-1)^{i+1} prod_{j != i} xi_j with factors in increasing
   order, and the full product xi = xi_1 xi_2 xi_3 xi_4 */
ContactElement k14_xi_hat(int i);
ContactElement k14_xi_top();

/* a_i = t xi_i + b hat(xi_i) */
ContactElement k14_a(int i, const Rational& b);

using CartanMatrix = Mat<Rational>;

/*
 * The 17-dimensional subalgebra
 *   C 1 + sum C xi_i + (sum C xi_i xi_j + C t) + sum C a_i + C e,
 * e = -t^2 + 2b xi, of the contact superalgebra on (t, xi_1..xi_4),
 * expressed over the root datum of D(2,1;a) with a = (1+b)/(1-b).  The
 * basis follows the layout of the other models: Cartan slots h_1..h_3
 * first (coroots of the simple roots, normalized so (X_al|X_{-al}) = 1
 * for positive al), then one root vector per datum root.  elements[i]
 * is the contact polynomial realizing basis slot i, and phi is
 * coefficient conjugation written in that basis; its fixed points are
 * the real span listed above.
 */
struct K14Realization {
    Rational b;
    Rational a;
    SuperLieAlgebra algebra;
    CartanMatrix cartan_matrix; /* rows normalized; equals (0,1,a; -1,2,0; -1,0,2) */
    std::vector<ContactElement> elements;
    ConjugateLinearMap phi;
    ContactElement e, x, f; /* -t^2 + 2b xi, t/2, -1 */
};

/* Throws DegenerateParameter for b in {1,-1} (a undefined resp. a = 0). */
K14Realization k14_realization(const Rational& b);

/*
 * Basis over the reals of {v : phi(v) = v} for a conjugate-linear map
 * phi(v) = M conj(v); its real dimension equals the complex dimension of
 * the algebra.  Throws NotInvolution when M conj(M) != id.
 */
std::vector<SVec> real_form_fixed_points(const SuperLieAlgebra& alg,
                                         const ConjugateLinearMap& phi);

}  // namespace wmin

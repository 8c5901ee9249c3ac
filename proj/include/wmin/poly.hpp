#pragma once

#include <string>
#include <vector>

#include "wmin/rational.hpp"

namespace wmin {

/* Univariate polynomial in the level variable k, rational coefficients in
   ascending degree with trailing zeros stripped. The degrees that actually
   occur are <= 2 (the component levels z_i(k) are linear and p(k) is
   quadratic), but the arithmetic is generic. */
class LevelPolynomial {
public:
    LevelPolynomial() = default;
    explicit LevelPolynomial(std::vector<Rational> ascending_coeffs);
    static LevelPolynomial constant(Rational c);
    /* c1*k + c0 */
    static LevelPolynomial linear(Rational c1, Rational c0);
    static LevelPolynomial variable();  // k

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
    Rational leading() const;
    Rational evaluate(const Rational& k) const;

    LevelPolynomial operator-() const;
    friend LevelPolynomial operator+(const LevelPolynomial& a, const LevelPolynomial& b);
    friend LevelPolynomial operator-(const LevelPolynomial& a, const LevelPolynomial& b);
    friend LevelPolynomial operator*(const LevelPolynomial& a, const LevelPolynomial& b);
    LevelPolynomial scaled(const Rational& c) const;
    LevelPolynomial monic() const;

    /* Quotient and remainder; divisor must be nonzero. */
    static std::pair<LevelPolynomial, LevelPolynomial> divmod(const LevelPolynomial& a,
                                                              const LevelPolynomial& b);
    static LevelPolynomial gcd(LevelPolynomial a, LevelPolynomial b);

    friend bool operator==(const LevelPolynomial& a, const LevelPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LevelPolynomial& a, const LevelPolynomial& b) {
        return !(a == b);
    }

    std::string to_string() const;  // human form, e.g. "-4/3*k - 1"

private:
    void strip();
    std::vector<Rational> coeffs_;
};

/* All rational roots of p, found by the rational-root theorem and verified
   by exact evaluation. Returned ascending. Throws ZeroPolynomial on p = 0. */
std::vector<Rational> rational_roots(const LevelPolynomial& p);

/* Root multiplicity via repeated exact synthetic division. */
int root_multiplicity(const LevelPolynomial& p, const Rational& r);

/* Ratio of two level polynomials, kept reduced with a monic denominator. */
class LevelRationalFunction {
public:
    LevelRationalFunction() : num_(), den_(LevelPolynomial::constant(Rational(1))) {}
    LevelRationalFunction(LevelPolynomial num, LevelPolynomial den);

    const LevelPolynomial& numerator() const { return num_; }
    const LevelPolynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /* Exact evaluation; throws DivisionByZero where the denominator vanishes. */
    Rational evaluate(const Rational& k) const;

    LevelRationalFunction operator-() const;
    friend LevelRationalFunction operator+(const LevelRationalFunction& a,
                                           const LevelRationalFunction& b);
    friend LevelRationalFunction operator-(const LevelRationalFunction& a,
                                           const LevelRationalFunction& b);
    friend LevelRationalFunction operator*(const LevelRationalFunction& a,
                                           const LevelRationalFunction& b);
    friend LevelRationalFunction operator/(const LevelRationalFunction& a,
                                           const LevelRationalFunction& b);

    friend bool operator==(const LevelRationalFunction& a, const LevelRationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const LevelRationalFunction& a, const LevelRationalFunction& b) {
        return !(a == b);
    }

    std::string to_string() const;

private:
    LevelPolynomial num_;
    LevelPolynomial den_;
};

}  // namespace wmin

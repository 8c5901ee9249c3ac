#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wmin/gaussian.hpp"

namespace wmin {

/* Element of a multi-quadratic extension of the Gaussian rationals:
   a finite sum  sum_r c_r * sqrt(r)  with squarefree positive integer
   radicands r and Gaussian-rational coefficients c_r. Radicand 1 holds
   the rational (Gaussian) part. This is the scalar field for all
   structure constants: the good-choice rescaling adjoins real positive
   square roots on demand. */
class RadicalScalar {
public:
    using TermMap = std::map<std::int64_t, Gaussian>;

    RadicalScalar() = default;
    RadicalScalar(long n) { set_term(1, Gaussian(n)); }  // NOLINT(google-explicit-constructor)
    RadicalScalar(Rational r) { set_term(1, Gaussian(std::move(r))); }  // NOLINT(google-explicit-constructor)
    RadicalScalar(Gaussian g) { set_term(1, std::move(g)); }  // NOLINT(google-explicit-constructor)
    RadicalScalar(std::int64_t radicand, Gaussian coeff);

    static RadicalScalar i() { return RadicalScalar(Gaussian::i()); }
    /* sqrt of a rational: sqrt(p/q) = sqrt(pq)/q with the square part of pq
       extracted; negative arguments produce i*sqrt(-r). */
    static RadicalScalar sqrt_of(const Rational& r);

    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    bool is_gaussian() const;                 // no radicand beyond 1
    bool is_rational() const;                 // real and no radicand
    Rational rational_value() const;          // throws unless is_rational()
    Gaussian gaussian_value() const;          // throws unless is_gaussian()

    RadicalScalar conj() const;               // complex conjugation
    RadicalScalar real_part() const;
    RadicalScalar imag_part() const;          // as a real scalar (coefficient of i)

    /* Exact sign of a real element; throws InternalError on non-real input. */
    int sign() const;

    RadicalScalar operator-() const;
    RadicalScalar& operator+=(const RadicalScalar& o);
    RadicalScalar& operator-=(const RadicalScalar& o);
    friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
    friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
    friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
    RadicalScalar& operator*=(const RadicalScalar& o) { return *this = *this * o; }
    RadicalScalar inverse() const;
    friend RadicalScalar operator/(const RadicalScalar& a, const RadicalScalar& b) {
        return a * b.inverse();
    }
    RadicalScalar& operator/=(const RadicalScalar& o) { return *this = *this / o; }

    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) {
        return !(a == b);
    }

    std::string to_string() const;

private:
    void set_term(std::int64_t radicand, Gaussian coeff);
    /* Splits *this as A + sqrt(p)*B with p-free A, B; p must divide some
       radicand. */
    void split_at_prime(std::int64_t p, RadicalScalar& a, RadicalScalar& b) const;
    std::int64_t any_radical_prime() const;   // 0 when no radicand beyond 1

    TermMap terms_;
};

RadicalScalar invert(const RadicalScalar& x);

}  // namespace wmin

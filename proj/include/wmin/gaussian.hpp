#pragma once

#include <string>

#include "wmin/rational.hpp"

namespace wmin {

/* Gaussian rational a + b i. The scalar tower needs i because the
   conjugate-linear involutions send e_i to sqrt(-1)*f_i on odd roots. */
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long n) : re(n) {}  // NOLINT(google-explicit-constructor)

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    Gaussian conj() const { return Gaussian(re, -im); }
    Rational norm() const { return re * re + im * im; }

    Gaussian operator-() const { return Gaussian(-re, -im); }
    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
    Gaussian& operator*=(const Gaussian& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }

    Gaussian inverse() const {
        Rational n = norm();
        if (n.is_zero()) throw DivisionByZero("inverse of zero gaussian rational");
        return Gaussian(re / n, -im / n);
    }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a * b.inverse(); }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    std::string to_string() const {
        if (im.is_zero()) return re.to_string();
        std::string imag;
        if (im == Rational(1)) imag = "i";
        else if (im == Rational(-1)) imag = "-i";
        else imag = im.to_string() + "i";
        if (re.is_zero()) return imag;
        if (im.sign() > 0) return re.to_string() + "+" + imag;
        return re.to_string() + imag;
    }
};

}  // namespace wmin

#include "wmin/rational.hpp"

namespace wmin {

Rational::Rational(const std::string& text) {
    if (v_.set_str(text, 10) != 0)
        throw ParseError("not a rational: '" + text + "'");
    if (v_.get_den() == 0)
        throw DivisionByZero("rational with zero denominator: '" + text + "'");
    v_.canonicalize();
}

Rational Rational::from_mpz(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    Rational r;
    r.v_ = mpq_class(n) / mpq_class(d);
    r.v_.canonicalize();
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational");
    return Rational(mpq_class(1) / v_);
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace wmin

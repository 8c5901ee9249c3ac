#include "wmin/poly.hpp"

#include <algorithm>

namespace wmin {

LevelPolynomial::LevelPolynomial(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    strip();
}

void LevelPolynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LevelPolynomial LevelPolynomial::constant(Rational c) {
    return LevelPolynomial({std::move(c)});
}

LevelPolynomial LevelPolynomial::linear(Rational c1, Rational c0) {
    return LevelPolynomial({std::move(c0), std::move(c1)});
}

LevelPolynomial LevelPolynomial::variable() {
    return LevelPolynomial({Rational(0), Rational(1)});
}

Rational LevelPolynomial::leading() const {
    if (is_zero()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational LevelPolynomial::evaluate(const Rational& k) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
    return acc;
}

LevelPolynomial LevelPolynomial::operator-() const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return LevelPolynomial(std::move(c));
}

LevelPolynomial operator+(const LevelPolynomial& a, const LevelPolynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return LevelPolynomial(std::move(c));
}

LevelPolynomial operator-(const LevelPolynomial& a, const LevelPolynomial& b) {
    return a + (-b);
}

LevelPolynomial operator*(const LevelPolynomial& a, const LevelPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return LevelPolynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LevelPolynomial(std::move(c));
}

LevelPolynomial LevelPolynomial::scaled(const Rational& c) const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x * c);
    return LevelPolynomial(std::move(out));
}

LevelPolynomial LevelPolynomial::monic() const {
    if (is_zero()) throw ZeroPolynomial("monic form of zero polynomial");
    return scaled(leading().inverse());
}

std::pair<LevelPolynomial, LevelPolynomial> LevelPolynomial::divmod(const LevelPolynomial& a,
                                                                    const LevelPolynomial& b) {
    if (b.is_zero()) throw ZeroPolynomial("polynomial division by zero");
    LevelPolynomial rem = a;
    std::vector<Rational> q;
    if (a.degree() >= b.degree()) q.assign(a.degree() - b.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational factor = rem.leading() / b.leading();
        q[shift] = factor;
        std::vector<Rational> sub(shift, Rational(0));
        for (const auto& x : b.coeffs_) sub.push_back(x * factor);
        rem = rem - LevelPolynomial(std::move(sub));
    }
    return {LevelPolynomial(std::move(q)), rem};
}

LevelPolynomial LevelPolynomial::gcd(LevelPolynomial a, LevelPolynomial b) {
    while (!b.is_zero()) {
        LevelPolynomial r = divmod(a, b).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
}

std::string LevelPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[d];
        if (c.is_zero()) continue;
        std::string mag = c.abs().to_string();
        std::string term;
        if (d == 0) {
            term = mag;
        } else {
            term = (mag == "1") ? "" : mag + "*";
            term += "k";
            if (d > 1) term += "^" + std::to_string(d);
        }
        if (out.empty()) {
            out = (c.sign() < 0 ? "-" : "") + term;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

std::vector<Rational> rational_roots(const LevelPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("rational_roots of zero polynomial");
    std::vector<Rational> roots;
    if (p.degree() == 0) return roots;

    /* Clear denominators to integer coefficients. */
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class d = c.denominator();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    std::vector<mpz_class> ic;
    ic.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) ic.push_back(c.numerator() * (den_lcm / c.denominator()));

    /* Factor out k^v for roots at zero. */
    size_t v = 0;
    while (v < ic.size() && ic[v] == 0) ++v;
    if (v > 0) roots.push_back(Rational(0));
    if (v + 1 == ic.size()) return roots;  // pure monomial

    mpz_class a0 = abs(ic[v]);
    mpz_class an = abs(ic.back());

    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> out;
        for (mpz_class d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                out.push_back(d);
                if (d * d != n) out.push_back(n / d);
            }
        }
        return out;
    };

    for (const mpz_class& num : divisors(a0)) {
        for (const mpz_class& den : divisors(an)) {
            if (gcd(num, den) != 1) continue;
            for (int s : {1, -1}) {
                Rational cand = Rational::from_mpz(s * num, den);
                if (p.evaluate(cand).is_zero()) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

int root_multiplicity(const LevelPolynomial& p, const Rational& r) {
    if (p.is_zero()) throw ZeroPolynomial("root_multiplicity of zero polynomial");
    LevelPolynomial cur = p;
    LevelPolynomial factor = LevelPolynomial::linear(Rational(1), -r);
    int mult = 0;
    while (!cur.is_zero() && cur.evaluate(r).is_zero()) {
        auto [q, rem] = LevelPolynomial::divmod(cur, factor);
        if (!rem.is_zero()) throw InternalError("synthetic division left a remainder");
        cur = q;
        ++mult;
    }
    return mult;
}

LevelRationalFunction::LevelRationalFunction(LevelPolynomial num, LevelPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = LevelPolynomial::constant(Rational(1));
        return;
    }
    LevelPolynomial g = LevelPolynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = LevelPolynomial::divmod(num_, g).first;
        den_ = LevelPolynomial::divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    den_ = den_.scaled(lead.inverse());
    num_ = num_.scaled(lead.inverse());
}

Rational LevelRationalFunction::evaluate(const Rational& k) const {
    Rational d = den_.evaluate(k);
    if (d.is_zero()) throw DivisionByZero("rational function pole at k = " + k.to_string());
    return num_.evaluate(k) / d;
}

LevelRationalFunction LevelRationalFunction::operator-() const {
    return LevelRationalFunction(-num_, den_);
}

LevelRationalFunction operator+(const LevelRationalFunction& a, const LevelRationalFunction& b) {
    return LevelRationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LevelRationalFunction operator-(const LevelRationalFunction& a, const LevelRationalFunction& b) {
    return a + (-b);
}

LevelRationalFunction operator*(const LevelRationalFunction& a, const LevelRationalFunction& b) {
    return LevelRationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

LevelRationalFunction operator/(const LevelRationalFunction& a, const LevelRationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return LevelRationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string LevelRationalFunction::to_string() const {
    if (den_ == LevelPolynomial::constant(Rational(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace wmin

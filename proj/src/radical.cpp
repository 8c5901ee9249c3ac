#include "wmin/radical.hpp"

#include <numeric>

namespace wmin {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw InternalError("radicand overflow in sqrt arithmetic");
    return r;
}

/* n = g^2 * s with s squarefree; returns {g, s}. Trial division: radicands
   here come from small structure-constant rationals, so n is tiny. */
std::pair<mpz_class, mpz_class> extract_square_part(mpz_class n) {
    mpz_class g = 1;
    mpz_class s = 1;
    for (mpz_class d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        for (int j = 0; j < e / 2; ++j) g *= d;
        if (e % 2) s *= d;
    }
    s *= n;  // leftover part is 1 or a single prime
    return {g, s};
}

std::int64_t to_int64_radicand(const mpz_class& s) {
    if (!s.fits_slong_p())
        throw InternalError("radicand exceeds 64-bit range");
    return static_cast<std::int64_t>(s.get_si());
}

}  // namespace

RadicalScalar::RadicalScalar(std::int64_t radicand, Gaussian coeff) {
    if (radicand < 1) throw InternalError("radicand must be positive");
    auto [g, s] = extract_square_part(mpz_class(static_cast<long>(radicand)));
    coeff *= Gaussian(Rational(mpq_class(g)));
    set_term(to_int64_radicand(s), std::move(coeff));
}

void RadicalScalar::set_term(std::int64_t radicand, Gaussian coeff) {
    if (coeff.is_zero()) {
        terms_.erase(radicand);
    } else {
        terms_[radicand] = std::move(coeff);
    }
}

RadicalScalar RadicalScalar::sqrt_of(const Rational& r) {
    if (r.is_zero()) return RadicalScalar();
    if (r.sign() < 0) return RadicalScalar::i() * sqrt_of(-r);
    mpz_class pq = r.numerator() * r.denominator();
    auto [g, s] = extract_square_part(pq);
    Rational coeff = Rational::from_mpz(g, r.denominator());
    RadicalScalar out;
    out.set_term(to_int64_radicand(s), Gaussian(coeff));
    return out;
}

bool RadicalScalar::is_real() const {
    for (const auto& kv : terms_)
        if (!kv.second.is_real()) return false;
    return true;
}

bool RadicalScalar::is_gaussian() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

bool RadicalScalar::is_rational() const { return is_gaussian() && is_real(); }

Rational RadicalScalar::rational_value() const {
    if (!is_rational()) throw InternalError("scalar is not rational: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second.re;
}

Gaussian RadicalScalar::gaussian_value() const {
    if (!is_gaussian()) throw InternalError("scalar is not gaussian rational: " + to_string());
    return terms_.empty() ? Gaussian() : terms_.begin()->second;
}

RadicalScalar RadicalScalar::conj() const {
    RadicalScalar out;
    for (const auto& [r, c] : terms_) out.set_term(r, c.conj());
    return out;
}

RadicalScalar RadicalScalar::real_part() const {
    RadicalScalar out;
    for (const auto& [r, c] : terms_) out.set_term(r, Gaussian(c.re));
    return out;
}

RadicalScalar RadicalScalar::imag_part() const {
    RadicalScalar out;
    for (const auto& [r, c] : terms_) out.set_term(r, Gaussian(c.im));
    return out;
}

RadicalScalar RadicalScalar::operator-() const {
    RadicalScalar out;
    for (const auto& [r, c] : terms_) out.set_term(r, -c);
    return out;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
    for (const auto& [r, c] : o.terms_) {
        auto it = terms_.find(r);
        if (it == terms_.end()) {
            terms_.emplace(r, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) {
    return *this += -o;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
    RadicalScalar out;
    for (const auto& [r, c] : a.terms_) {
        for (const auto& [s, d] : b.terms_) {
            std::int64_t g = std::gcd(r, s);
            std::int64_t rad = checked_mul(r / g, s / g);
            Gaussian coeff = c * d * Gaussian(Rational(static_cast<long>(g)));
            auto it = out.terms_.find(rad);
            if (it == out.terms_.end()) {
                if (!coeff.is_zero()) out.terms_.emplace(rad, coeff);
            } else {
                it->second += coeff;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

std::int64_t RadicalScalar::any_radical_prime() const {
    for (const auto& kv : terms_) {
        std::int64_t r = kv.first;
        if (r == 1) continue;
        for (std::int64_t d = 2; d * d <= r; ++d)
            if (r % d == 0) return d;
        return r;  // r itself is prime
    }
    return 0;
}

void RadicalScalar::split_at_prime(std::int64_t p, RadicalScalar& a, RadicalScalar& b) const {
    a = RadicalScalar();
    b = RadicalScalar();
    for (const auto& [r, c] : terms_) {
        if (r % p == 0)
            b.set_term(r / p, c);
        else
            a.set_term(r, c);
    }
}

RadicalScalar RadicalScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    std::int64_t p = any_radical_prime();
    if (p == 0) return RadicalScalar(gaussian_value().inverse());
    /* x = A + sqrt(p) B with A, B free of p. Multiplying by A - sqrt(p) B
       eliminates p; the new denominator A^2 - p B^2 cannot vanish because
       sqrt(p) does not lie in the p-free subfield. */
    RadicalScalar a, b;
    split_at_prime(p, a, b);
    RadicalScalar sqrt_p;
    sqrt_p.set_term(p, Gaussian(Rational(1)));
    RadicalScalar denom = a * a - RadicalScalar(Rational(static_cast<long>(p))) * b * b;
    if (denom.is_zero()) throw InternalError("radical inverse: degenerate conjugate");
    return (a - sqrt_p * b) * denom.inverse();
}

int RadicalScalar::sign() const {
    if (!is_real()) throw InternalError("sign of non-real scalar: " + to_string());
    if (is_zero()) return 0;
    std::int64_t p = any_radical_prime();
    if (p == 0) return terms_.begin()->second.re.sign();
    RadicalScalar a, b;
    split_at_prime(p, a, b);
    int sa = a.sign();
    int sb = b.sign();
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    RadicalScalar norm = a * a - RadicalScalar(Rational(static_cast<long>(p))) * b * b;
    return sa * norm.sign();
}

std::string RadicalScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [r, c] : terms_) {
        std::string piece;
        if (r == 1) {
            piece = c.to_string();
        } else if (c == Gaussian(1)) {
            piece = "sqrt(" + std::to_string(r) + ")";
        } else if (c == -Gaussian(1)) {
            piece = "-sqrt(" + std::to_string(r) + ")";
        } else if (c.is_real() || c.re.is_zero()) {
            piece = c.to_string() + "*sqrt(" + std::to_string(r) + ")";
        } else {
            piece = "(" + c.to_string() + ")*sqrt(" + std::to_string(r) + ")";
        }
        if (!first && piece[0] != '-') out += "+";
        out += piece;
        first = false;
    }
    return out;
}

RadicalScalar invert(const RadicalScalar& x) { return x.inverse(); }

}  // namespace wmin

#include <cstddef>
#include <string>
#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/errors.hpp"
#include "wmin/radical.hpp"
#include "wmin/rational.hpp"
#include "wmin/roots.hpp"

namespace wmin {

namespace {

long exact_long(const Rational& r) {
    if (!r.is_integer() || !r.numerator().fits_slong_p())
        throw InternalError("expected a small integer exponent");
    return r.numerator().get_si();
}

RadicalScalar power(const RadicalScalar& base, long e) {
    RadicalScalar b = e < 0 ? base.inverse() : base;
    if (e < 0) e = -e;
    RadicalScalar out{Rational(1)};
    for (long i = 0; i < e; ++i) out = out * b;
    return out;
}

/* Coefficient of the basis vector `slot` in v, zero when absent. */
RadicalScalar coeff_at(const SVec& v, int slot) {
    for (const auto& [idx, c] : v)
        if (idx == slot) return c;
    return RadicalScalar(Rational(0));
}

std::string root_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].to_string();
    }
    return s + ")";
}

}  // namespace

Lambda lambda_zero(const SuperLieAlgebra& alg) {
    Lambda l;
    for (const Root& a : alg.datum.simple_roots) {
        if (a.odd) {
            l.lam.push_back(RadicalScalar::i());
        } else if (a.v == alg.datum.theta) {
            /* purely even degenerate member: the highest root is itself
               simple, and the direction through it must stay split so the
               involution fixes the associated triple */
            l.lam.push_back(RadicalScalar(Rational(1)));
        } else {
            Rational n = alg.datum.form(a.v, a.v);
            l.lam.push_back(RadicalScalar(Rational(n.sign() > 0 ? -1 : 1)));
        }
    }
    return l;
}

/* Coefficients w with omega(X_alpha) = w_alpha X_{-alpha}, where omega is the
   conjugate-linear involution sending e_i -> lambda_i f_i, f_i -> mu_i e_i
   (mu_i forced by omega^2 = id), h -> -h.  Indexed by all_roots position. */
std::vector<RadicalScalar> omega_root_coeffs(const SuperLieAlgebra& alg,
                                             const Lambda& lambda) {
    const RootDatum& d = alg.datum;
    const size_t nsimple = d.simple_roots.size();
    if (lambda.lam.size() != nsimple)
        throw BadLambda("need one parameter per simple root");
    for (size_t i = 0; i < nsimple; ++i) {
        const RadicalScalar& l = lambda.lam[i];
        if (l.is_zero()) throw BadLambda("zero parameter at position " + std::to_string(i));
        if (d.simple_roots[i].odd) {
            if (!l.real_part().is_zero())
                throw BadLambda("parameter for an odd simple root must be purely imaginary");
        } else {
            if (!l.is_real())
                throw BadLambda("parameter for an even simple root must be real");
        }
    }

    const size_t nroots = d.all_roots.size();
    std::vector<RadicalScalar> w(nroots, RadicalScalar(Rational(0)));
    std::vector<bool> have(nroots, false);

    for (size_t i = 0; i < nsimple; ++i) {
        Vec neg = d.simple_roots[i].v;
        for (auto& c : neg) c = -c;
        int pi = d.root_index(d.simple_roots[i].v);
        int ni = d.root_index(neg);
        w[pi] = lambda.lam[i];
        w[ni] = lambda.lam[i].conj().inverse();
        have[pi] = true;
        have[ni] = true;
    }

    /* positive_roots is sorted by height, so alpha - alpha_p is always
       available before alpha; negatives get the mirrored decomposition. */
    for (const Root& pos : d.positive_roots) {
        int ai = d.root_index(pos.v);
        if (have[ai]) continue;
        Vec neg = pos.v;
        for (auto& c : neg) c = -c;
        int mi = d.root_index(neg);

        bool done = false;
        for (size_t p = 0; p < nsimple && !done; ++p) {
            Vec rest = pos.v;
            for (size_t t = 0; t < rest.size(); ++t) rest[t] = rest[t] - d.simple_roots[p].v[t];
            int ri = d.root_index(rest);
            if (ri < 0 || !have[ri]) continue;
            Vec nrest = rest;
            for (auto& c : nrest) c = -c;
            int nri = d.root_index(nrest);
            Vec ngen_v = d.simple_roots[p].v;
            for (auto& c : ngen_v) c = -c;
            int pgen = d.root_index(d.simple_roots[p].v);
            int ngen = d.root_index(ngen_v);

            SVec br = alg.bracket(alg.vec_of_root[pgen], alg.vec_of_root[ri]);
            RadicalScalar n = coeff_at(br, alg.vec_of_root[ai]);
            if (n.is_zero()) continue;
            SVec nbr = alg.bracket(alg.vec_of_root[ngen], alg.vec_of_root[nri]);
            RadicalScalar np = coeff_at(nbr, alg.vec_of_root[mi]);
            if (np.is_zero())
                throw ConsistencyFailure("mirror structure constant vanished unexpectedly");

            w[ai] = n.inverse().conj() * w[pgen] * w[ri] * np;
            w[mi] = np.inverse().conj() * w[ngen] * w[nri] * n;
            have[ai] = true;
            have[mi] = true;
            done = true;
        }
        if (!done) throw ConsistencyFailure("no usable decomposition for a positive root");
    }

    /* omega^2 = id on every root vector. */
    for (size_t r = 0; r < nroots; ++r) {
        Vec neg = d.all_roots[r].v;
        for (auto& c : neg) c = -c;
        int mi = d.root_index(neg);
        RadicalScalar prod = w[mi] * w[r].conj();
        if (!(prod == RadicalScalar(Rational(1))))
            throw ConsistencyFailure("involution squared is not the identity on a root vector");
    }
    return w;
}

RootVectorBasis good_choice(const SuperLieAlgebra& alg, const Lambda& lambda) {
    const RootDatum& d = alg.datum;
    std::vector<RadicalScalar> w = omega_root_coeffs(alg, lambda);
    const size_t nroots = d.all_roots.size();
    const size_t nsimple = d.simple_roots.size();

    /* Per-simple sign xi_i: sign of the norm for even simples, +1 for odd. */
    std::vector<int> xi_simple(nsimple, 1);
    for (size_t i = 0; i < nsimple; ++i) {
        if (!d.simple_roots[i].odd) {
            Rational n = d.form(d.simple_roots[i].v, d.simple_roots[i].v);
            xi_simple[i] = n.sign();
        }
    }

    RootVectorBasis out;
    out.sigma.assign(nroots, 1);
    out.xi.assign(nroots, 1);
    out.lambda_root.assign(nroots, RadicalScalar(Rational(1)));
    out.t.assign(nroots, RadicalScalar(Rational(1)));
    out.rescale.assign(alg.dim, RadicalScalar(Rational(1)));
    out.lambda = lambda;

    for (size_t r = 0; r < nroots; ++r) {
        const Root& a = d.all_roots[r];
        bool positive = d.is_positive(a.v);
        out.sigma[r] = (a.odd && !positive) ? -1 : 1;
        if (!a.odd) {
            out.xi[r] = d.form(a.v, a.v).sign();
        }
        Vec co = d.simple_coords(a.v);
        RadicalScalar prod{Rational(1)};
        for (size_t i = 0; i < nsimple; ++i) {
            long e = exact_long(co[i]);
            if (e == 0) continue;
            RadicalScalar base = RadicalScalar(Rational(-xi_simple[i])) * lambda.lam[i];
            prod = prod * power(base, e);
        }
        out.lambda_root[r] = prod;
        out.t[r] = RadicalScalar(Rational(-out.sigma[r] * out.xi[r])) * prod;
    }

    /* Diagonal rescale Y_alpha = c_alpha X_alpha on positives, Y_{-alpha} =
       X_{-alpha}/c_alpha, with c_alpha = sqrt(t_alpha / w_alpha) > 0. */
    for (const Root& pos : d.positive_roots) {
        int ai = d.root_index(pos.v);
        Vec neg = pos.v;
        for (auto& c : neg) c = -c;
        int mi = d.root_index(neg);
        RadicalScalar ratio = out.t[ai] / w[ai];
        if (!ratio.is_rational() || ratio.sign() <= 0)
            throw NormalizationFailure("required rescale squared is not a positive rational for root " +
                                       root_str(d.all_roots[ai].v));
        RadicalScalar c = RadicalScalar::sqrt_of(ratio.rational_value());
        out.rescale[alg.vec_of_root[ai]] = c;
        out.rescale[alg.vec_of_root[mi]] = c.inverse();
    }

    /* Rebuild the table and form in the rescaled basis. */
    out.alg = alg;
    SuperLieAlgebra& na = out.alg;
    for (int i = 0; i < alg.dim; ++i) {
        for (int j = i; j < alg.dim; ++j) {
            SVec nb;
            for (const auto& [k, c] : alg.table[static_cast<size_t>(i) * alg.dim + j]) {
                RadicalScalar nc = c * out.rescale[i] * out.rescale[j] / out.rescale[k];
                if (!nc.is_zero()) nb.emplace_back(k, nc);
            }
            na.table[static_cast<size_t>(i) * alg.dim + j] = nb;
        }
    }
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j)
            na.form.at(i, j) = na.form.at(i, j) * out.rescale[i] * out.rescale[j];

    /* The rescaled vectors must satisfy omega(Y_alpha) = t_alpha Y_{-alpha}
       for every root; recompute the involution coefficients to check. */
    std::vector<RadicalScalar> wn = omega_root_coeffs(na, lambda);
    for (size_t r = 0; r < nroots; ++r) {
        if (!(wn[r] == out.t[r]))
            throw NormalizationFailure("rescaled basis does not realize the prescribed involution on " +
                                       root_str(d.all_roots[r].v));
    }
    return out;
}

}  // namespace wmin

#include <cstddef>
#include <string>
#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/errors.hpp"
#include "wmin/halfform.hpp"
#include "wmin/involution.hpp"
#include "wmin/linalg.hpp"
#include "wmin/radical.hpp"
#include "wmin/rational.hpp"
#include "wmin/roots.hpp"

namespace wmin {

namespace {

const RadicalScalar kOne{Rational(1)};

Vec vneg(const Vec& v) {
    Vec n = v;
    for (auto& c : n) c = -c;
    return n;
}

Vec vsub(const Vec& a, const Vec& b) {
    Vec out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] = out[i] - b[i];
    return out;
}

std::string root_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].to_string();
    }
    return s + ")";
}

bool in_half_space(const SuperLieAlgebra& alg, const Sl2Triple& t, const SVec& v) {
    SVec moved = alg.bracket(t.x, v);
    SVec expect = sv_scale(v, RadicalScalar(Rational(-1, 2)));
    return sv_is_zero(sv_sub(moved, expect));
}

/* coordinates over the u basis: u_a is the unique basis vector whose
   positive odd slot is a, so the coefficient can be read off directly */
std::vector<RadicalScalar> u_coords(const SuperLieAlgebra& alg, const std::vector<int>& pos_of,
                                    const std::vector<SVec>& u, const SVec& w) {
    std::vector<RadicalScalar> gamma(u.size(), RadicalScalar(Rational(0)));
    for (const auto& [idx, c] : w) {
        int r = alg.root_of[idx];
        if (r < 0) continue;
        const Root& a = alg.datum.all_roots[r];
        if (a.odd && alg.datum.is_positive(a.v)) gamma[pos_of[r]] = c;
    }
    SVec rebuilt;
    for (size_t j = 0; j < u.size(); ++j) rebuilt = sv_add(rebuilt, sv_scale(u[j], gamma[j]));
    if (!sv_is_zero(sv_sub(rebuilt, w)))
        throw InternalError("vector lies outside the span of the u basis");
    return gamma;
}

}  // namespace

RadicalScalar half_pair(const SuperLieAlgebra& alg, const Sl2Triple& t, const SVec& a,
                        const SVec& b) {
    if (!in_half_space(alg, t, a))
        throw WrongGrade("first pairing argument is not in the -1/2 eigenspace");
    if (!in_half_space(alg, t, b))
        throw WrongGrade("second pairing argument is not in the -1/2 eigenspace");
    return alg.form_pair(t.e, alg.bracket(a, b));
}

HalfSpaceBasis half_basis(const RootVectorBasis& basis, const ConjugateLinearMap& phi,
                          const Sl2Triple& t, const GradedDecomposition& grading) {
    const SuperLieAlgebra& alg = basis.alg;
    const RootDatum& d = alg.datum;
    const Vec& theta = d.theta;
    Vec mtheta = vneg(theta);
    RadicalScalar ii = RadicalScalar::i();
    RadicalScalar half(Rational(1, 2));

    HalfSpaceBasis hb;
    std::vector<int> pos_of(d.all_roots.size(), -1);
    for (size_t r = 0; r < d.all_roots.size(); ++r) {
        const Root& a = d.all_roots[r];
        if (!a.odd || !d.is_positive(a.v)) continue;
        pos_of[r] = static_cast<int>(hb.alpha.size());
        hb.alpha.push_back(static_cast<int>(r));
    }
    if (hb.alpha.size() != grading.eigenspaces[1].size())
        throw ConsistencyFailure("positive odd roots do not exhaust the -1/2 eigenspace");

    for (int r : hb.alpha) {
        const Vec& a = d.all_roots[r].v;
        Vec am = vsub(a, theta);
        Vec ma = vsub(theta, a);
        RadicalScalar n = structure_constant(alg, mtheta, a);
        SVec u = sv_add(sv_unit(alg.vec_of_root[r]),
                        sv_unit(alg.vec_of_root[d.root_index(am)], ii * n));
        hb.n_theta.push_back(n);
        hb.u.push_back(u);

        if (!(n * n == kOne))
            throw IdentityFailure("N(-theta,a)^2 = 1 fails at a = " + root_str(a));
        if (!(n * structure_constant(alg, theta, am) == kOne))
            throw IdentityFailure("N(-theta,a) N(theta,a-theta) = 1 fails at a = " + root_str(a));
        if (!(n * structure_constant(alg, mtheta, ma) == kOne))
            throw IdentityFailure("N(-theta,a) N(-theta,theta-a) = 1 fails at a = " +
                                  root_str(a));
        if (!in_half_space(alg, t, u))
            throw IdentityFailure("[x,u_a] = -(1/2) u_a fails at a = " + root_str(a));
        SVec lifted = alg.bracket(t.e, u);
        SVec want = sv_add(sv_unit(alg.vec_of_root[r], ii),
                           sv_unit(alg.vec_of_root[d.root_index(am)], n));
        if (!sv_is_zero(sv_sub(lifted, want)))
            throw IdentityFailure("[e,u_a] = i X_a + N(-theta,a) X(a-theta) fails at a = " +
                                  root_str(a));
    }

    int n_pos = static_cast<int>(hb.alpha.size());
    for (int p = 0; p < n_pos; ++p) {
        const Vec& a = d.all_roots[hb.alpha[p]].v;
        int mirror = pos_of[d.root_index(vsub(theta, a))];
        SVec pu = phi.apply(hb.u[p]);
        if (!sv_is_zero(sv_sub(pu, sv_scale(hb.u[mirror], hb.n_theta[p]))))
            throw IdentityFailure("phi(u_a) = N(-theta,a) u(theta-a) fails at a = " +
                                  root_str(a));

        SVec v = sv_add(sv_scale(sv_sub(hb.u[p], pu), half),
                        sv_scale(sv_add(hb.u[p], pu), ii * half));
        if (!sv_is_zero(sv_add(phi.apply(v), v)))
            throw IdentityFailure("phi(v_a) = -v_a fails at a = " + root_str(a));
        hb.v.push_back(v);
    }

    for (int p = 0; p < n_pos; ++p)
        for (int q = 0; q < n_pos; ++q) {
            const Vec& a = d.all_roots[hb.alpha[p]].v;
            const Vec& b = d.all_roots[hb.alpha[q]].v;
            RadicalScalar got = half_pair(alg, t, hb.u[p], hb.u[q]);
            RadicalScalar want{Rational(0)};
            if (vsub(theta, a) == b) want = -(hb.n_theta[p] + hb.n_theta[q]);
            if (!(got == want))
                throw IdentityFailure(
                    "<u_a,u_b> = -(N(-theta,a)+N(-theta,b)) delta(theta-a,b) fails at a = " +
                    root_str(a) + ", b = " + root_str(b));
        }

    /* the fixed-point space of -phi, solved over the reals in u coordinates:
       for w = sum (x_j + i y_j) u_j the condition phi(w) = -w reads
       sum x_j (u_j + phi(u_j)) + y_j i (u_j - phi(u_j)) = 0 */
    Mat<RadicalScalar> sys(2 * n_pos, 2 * n_pos);
    for (int j = 0; j < n_pos; ++j) {
        SVec pu = phi.apply(hb.u[j]);
        std::vector<RadicalScalar> xa = u_coords(alg, pos_of, hb.u, sv_add(hb.u[j], pu));
        std::vector<RadicalScalar> yb =
            u_coords(alg, pos_of, hb.u, sv_scale(sv_sub(hb.u[j], pu), ii));
        for (int c = 0; c < n_pos; ++c) {
            sys.at(2 * c, j) = xa[c].real_part();
            sys.at(2 * c + 1, j) = xa[c].imag_part();
            sys.at(2 * c, n_pos + j) = yb[c].real_part();
            sys.at(2 * c + 1, n_pos + j) = yb[c].imag_part();
        }
    }
    std::vector<std::vector<RadicalScalar>> kernel = nullspace(sys);
    if (static_cast<int>(kernel.size()) != n_pos)
        throw ConsistencyFailure("fixed-point space has unexpected real dimension");
    for (const auto& kv : kernel) {
        SVec r;
        for (int j = 0; j < n_pos; ++j) {
            if (!kv[j].is_real() || !kv[n_pos + j].is_real())
                throw InternalError("real kernel produced a non-real coefficient");
            r = sv_add(r, sv_scale(hb.u[j], kv[j]));
            r = sv_add(r, sv_scale(hb.u[j], ii * kv[n_pos + j]));
        }
        if (!sv_is_zero(sv_add(phi.apply(r), r)))
            throw ConsistencyFailure("kernel vector is not a fixed point of -phi");
        hb.r_basis.push_back(r);
    }

    /* the v vectors must span the same real space */
    Mat<RadicalScalar> stacked(2 * n_pos, 2 * n_pos);
    for (int p = 0; p < n_pos; ++p) {
        std::vector<RadicalScalar> gamma = u_coords(alg, pos_of, hb.u, hb.v[p]);
        for (int c = 0; c < n_pos; ++c) {
            stacked.at(p, c) = gamma[c].real_part();
            stacked.at(p, n_pos + c) = gamma[c].imag_part();
        }
        for (int c = 0; c < 2 * n_pos; ++c) stacked.at(n_pos + p, c) = kernel[p][c];
    }
    Mat<RadicalScalar> vrows(n_pos, 2 * n_pos);
    for (int p = 0; p < n_pos; ++p)
        for (int c = 0; c < 2 * n_pos; ++c) vrows.at(p, c) = stacked.at(p, c);
    if (static_cast<int>(rank(vrows)) != n_pos)
        throw ConsistencyFailure("v vectors do not form a real basis");
    if (static_cast<int>(rank(stacked)) != n_pos)
        throw ConsistencyFailure("fixed-point span disagrees with the span of the v basis");
    return hb;
}

Mat<RadicalScalar> gram_on_r(const SuperLieAlgebra& alg, const Sl2Triple& t,
                             const HalfSpaceBasis& hb) {
    int n = static_cast<int>(hb.v.size());
    Mat<RadicalScalar> g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = half_pair(alg, t, hb.v[i], hb.v[j]);

    auto minor_str = [&](int i, int j) {
        return "[[" + g.at(i, i).to_string() + ", " + g.at(i, j).to_string() + "], [" +
               g.at(j, i).to_string() + ", " + g.at(j, j).to_string() + "]]";
    };
    RadicalScalar two(Rational(2));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int other = (i == j) ? (j + 1) % n : j;
            if (!g.at(i, j).is_rational() || !g.at(j, i).is_rational())
                throw PositivityFailure("gram entry is not rational; minor at (" +
                                        std::to_string(i) + "," + std::to_string(j) + "): " +
                                        minor_str(i, other));
            RadicalScalar want = (i == j) ? two : RadicalScalar(Rational(0));
            if (!(g.at(i, j) == want) || !(g.at(j, i) == want))
                throw PositivityFailure("gram matrix is not twice the identity; minor at (" +
                                        std::to_string(i) + "," + std::to_string(other) + "): " +
                                        minor_str(i, other));
        }
    return g;
}

}  // namespace wmin

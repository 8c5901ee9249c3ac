#include <string>
#include <utility>
#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/errors.hpp"

/*
 * Matrix models for the four catalog families that act on a super vector
 * space: sl(2|m) and psl(2|2) as supertraceless (2|m) matrices, spo(2|m)
 * as the superalgebra preserving a split symmetric form on the even m-dim
 * block and a symplectic form on the odd 2-dim block, osp(4|m) with the
 * blocks the other way around.  Root vectors come from exact nullspaces of
 * the form-preservation condition inside each weight space, the invariant
 * form is a supertrace rescaled so (theta|theta) = 2, and psl(2|2) works
 * with canonical sl(2|2) representatives whose last diagonal entry is zero.
 */

namespace wmin {

namespace {

struct SuperSpace {
    int n_even = 0;
    int n_total = 0;
    std::vector<bool> vparity;   /* per superspace position */
    std::vector<Vec> vweight;    /* coordinate weight per position */
    std::vector<int> coord_pos;  /* coordinate index -> position with weight +coord */
    Mat<Rational> b;             /* preserved bilinear form (unused for sl) */
    bool use_form = false;
};

SuperSpace make_space(const AlgebraSpec& spec, const RootDatum& d) {
    SuperSpace s;
    int cdim = d.coordinate_dim;
    auto unit = [cdim](int t) {
        Vec v(cdim, Rational(0));
        v[t] = Rational(1);
        return v;
    };
    switch (spec.family) {
        case Family::SL2m:
        case Family::PSL22: {
            int m = (spec.family == Family::PSL22) ? 2 : spec.m;
            s.n_even = 2;
            s.n_total = m + 2;
            for (int p = 0; p < s.n_total; ++p) {
                s.vparity.push_back(p >= 2);
                s.vweight.push_back(unit(p));
                s.coord_pos.push_back(p);
            }
            s.use_form = false;
            break;
        }
        case Family::SPO2m: {
            int m = spec.m;
            int n = m / 2;
            s.n_even = m;
            s.n_total = m + 2;
            s.vparity.assign(m, false);
            s.vparity.push_back(true);
            s.vparity.push_back(true);
            s.vweight.assign(s.n_total, Vec(cdim, Rational(0)));
            s.coord_pos.assign(cdim, -1);
            for (int i = 0; i < n; ++i) {
                s.vweight[i][1 + i] = Rational(1);
                s.vweight[m - 1 - i][1 + i] = Rational(-1);
                s.coord_pos[1 + i] = i;
            }
            s.vweight[m][0] = Rational(1);
            s.vweight[m + 1][0] = Rational(-1);
            s.coord_pos[0] = m;
            s.b = Mat<Rational>(s.n_total, s.n_total);
            for (int i = 0; i < m; ++i) s.b.at(i, m - 1 - i) = Rational(1);
            s.b.at(m, m + 1) = Rational(1);
            s.b.at(m + 1, m) = Rational(-1);
            s.use_form = true;
            break;
        }
        case Family::OSP4m: {
            int m = spec.m;
            int r = m / 2;
            s.n_even = 4;
            s.n_total = 4 + m;
            s.vparity.assign(4, false);
            for (int j = 0; j < m; ++j) s.vparity.push_back(true);
            s.vweight.assign(s.n_total, Vec(cdim, Rational(0)));
            s.coord_pos.assign(cdim, -1);
            s.vweight[0][0] = Rational(1);
            s.vweight[3][0] = Rational(-1);
            s.vweight[1][1] = Rational(1);
            s.vweight[2][1] = Rational(-1);
            s.coord_pos[0] = 0;
            s.coord_pos[1] = 1;
            for (int j = 0; j < r; ++j) {
                s.vweight[4 + j][2 + j] = Rational(1);
                s.vweight[4 + m - 1 - j][2 + j] = Rational(-1);
                s.coord_pos[2 + j] = 4 + j;
            }
            s.b = Mat<Rational>(s.n_total, s.n_total);
            for (int i = 0; i < 4; ++i) s.b.at(i, 3 - i) = Rational(1);
            for (int j = 0; j < r; ++j) {
                s.b.at(4 + j, 4 + m - 1 - j) = Rational(1);
                s.b.at(4 + m - 1 - j, 4 + j) = Rational(-1);
            }
            s.use_form = true;
            break;
        }
        default:
            throw UnsupportedFamily("no matrix model for " + spec.name());
    }
    return s;
}

bool weight_difference_is(const SuperSpace& s, int r, int c, const Vec& alpha) {
    for (size_t t = 0; t < alpha.size(); ++t)
        if (s.vweight[r][t] - s.vweight[c][t] != alpha[t]) return false;
    return true;
}

Mat<RadicalScalar> root_matrix(const SuperSpace& s, const Root& root) {
    std::vector<std::pair<int, int>> support;
    for (int r = 0; r < s.n_total; ++r)
        for (int c = 0; c < s.n_total; ++c) {
            if (r == c) continue;
            if (!weight_difference_is(s, r, c, root.v)) continue;
            if ((s.vparity[r] != s.vparity[c]) != root.odd)
                throw ConstructionFailure("weight space parity mismatch");
            support.emplace_back(r, c);
        }
    if (support.empty()) throw ConstructionFailure("empty weight space for a root");
    Mat<RadicalScalar> m(s.n_total, s.n_total);
    if (!s.use_form) {
        if (support.size() != 1)
            throw ConstructionFailure("gl weight space dimension is not one");
        m.at(support[0].first, support[0].second) = RadicalScalar(1);
        return m;
    }
    /* form preservation B(Xu, v) + (-1)^{p(X)p(u)} B(u, Xv) = 0, one linear
       constraint per position pair (q, t) */
    Mat<Rational> a(s.n_total * s.n_total, support.size());
    for (size_t k = 0; k < support.size(); ++k) {
        int r = support[k].first;
        int c = support[k].second;
        for (int t = 0; t < s.n_total; ++t)
            if (!s.b.at(r, t).is_zero()) a.at(c * s.n_total + t, k) += s.b.at(r, t);
        for (int q = 0; q < s.n_total; ++q)
            if (!s.b.at(q, r).is_zero()) {
                Rational sgn((root.odd && s.vparity[q]) ? -1 : 1);
                a.at(q * s.n_total + c, k) += sgn * s.b.at(q, r);
            }
    }
    std::vector<std::vector<Rational>> ns = nullspace(a);
    if (ns.size() != 1) throw ConstructionFailure("root space dimension is not one");
    for (size_t k = 0; k < support.size(); ++k)
        m.at(support[k].first, support[k].second) = RadicalScalar(ns[0][k]);
    return m;
}

RadicalScalar mstr(const SuperSpace& s, const Mat<RadicalScalar>& m) {
    RadicalScalar out(0);
    for (int i = 0; i < s.n_total; ++i) {
        if (i < s.n_even)
            out += m.at(i, i);
        else
            out -= m.at(i, i);
    }
    return out;
}

Mat<RadicalScalar> mat_bracket(const Mat<RadicalScalar>& a, bool pa, const Mat<RadicalScalar>& b,
                               bool pb) {
    Mat<RadicalScalar> ab = a * b;
    Mat<RadicalScalar> ba = b * a;
    RadicalScalar sgn((pa && pb) ? 1 : -1);
    Mat<RadicalScalar> out(ab.rows, ab.cols);
    for (size_t i = 0; i < ab.data.size(); ++i) out.data[i] = ab.data[i] + sgn * ba.data[i];
    return out;
}

bool mat_is_zero(const Mat<RadicalScalar>& m) {
    for (const auto& x : m.data)
        if (!x.is_zero()) return false;
    return true;
}

/* psl(2|2): subtract (last diagonal entry) * identity */
Mat<RadicalScalar> canonical_rep(Mat<RadicalScalar> m, bool quotient) {
    if (!quotient) return m;
    RadicalScalar last = m.at(m.rows - 1, m.cols - 1);
    if (last.is_zero()) return m;
    for (size_t i = 0; i < m.rows; ++i) m.at(i, i) -= last;
    return m;
}

RadicalScalar eval_functional(const SuperSpace& s, const Vec& f, const Mat<RadicalScalar>& k) {
    RadicalScalar out(0);
    for (size_t t = 0; t < f.size(); ++t) {
        if (f[t].is_zero()) continue;
        if (s.coord_pos[t] < 0) throw InternalError("coordinate without a diagonal position");
        out += RadicalScalar(f[t]) * k.at(s.coord_pos[t], s.coord_pos[t]);
    }
    return out;
}

struct Built {
    SuperLieAlgebra algebra;
    MatrixModel model;
};

Built build_model(const AlgebraSpec& spec) {
    RootDatum d = root_system(spec);
    SuperSpace s = make_space(spec, d);
    bool quotient = (spec.family == Family::PSL22);
    int nroots = (int)d.all_roots.size();

    std::vector<Mat<RadicalScalar>> rm(nroots);
    for (int i = 0; i < nroots; ++i) rm[i] = root_matrix(s, d.all_roots[i]);

    auto negated = [&](const Vec& v) {
        Vec w(v.size(), Rational(0));
        for (size_t t = 0; t < v.size(); ++t) w[t] = -v[t];
        return w;
    };

    /* form scale: [X_th, X_{-th}] = str(X_th X_{-th}) * (str-dual of theta),
       so (theta|theta)_str = theta([X_th, X_{-th}]) / str(X_th X_{-th}).
       Under B = c*str the induced form on weights is (.|.)_str / c, and the
       catalog normalizes (theta|theta) = 2, so c = (theta|theta)_str / 2. */
    int itheta = d.root_index(d.theta);
    int imtheta = d.root_index(negated(d.theta));
    if (itheta < 0 || imtheta < 0) throw InternalError("theta missing from the root list");
    Mat<RadicalScalar> ktheta = mat_bracket(rm[itheta], false, rm[imtheta], false);
    RadicalScalar pair_theta = mstr(s, rm[itheta] * rm[imtheta]);
    if (pair_theta.is_zero()) throw ConstructionFailure("degenerate theta pairing");
    RadicalScalar theta_norm = eval_functional(s, d.theta, ktheta) / pair_theta;
    if (theta_norm.is_zero()) throw ConstructionFailure("theta has zero norm");
    RadicalScalar c_form = theta_norm / RadicalScalar(2);

    auto form_of = [&](const Mat<RadicalScalar>& a, const Mat<RadicalScalar>& b) {
        return c_form * mstr(s, a * b);
    };

    /* normalize so (X_a | X_{-a}) = 1 for positive a */
    for (const Root& p : d.positive_roots) {
        int ip = d.root_index(p.v);
        int in = d.root_index(negated(p.v));
        RadicalScalar pairing = form_of(rm[ip], rm[in]);
        if (pairing.is_zero()) throw ConstructionFailure("degenerate root pairing");
        RadicalScalar inv = RadicalScalar(1) / pairing;
        for (auto& x : rm[in].data) x *= inv;
    }

    /* coroots of the simple roots become the Cartan slots */
    int nsimple = (int)d.simple_roots.size();
    std::vector<Mat<RadicalScalar>> hs(nsimple);
    for (int j = 0; j < nsimple; ++j) {
        const Root& a = d.simple_roots[j];
        int ip = d.root_index(a.v);
        int in = d.root_index(negated(a.v));
        hs[j] = canonical_rep(mat_bracket(rm[ip], a.odd, rm[in], a.odd), quotient);
    }
    if (quotient) {
        if (!(hs[2] == hs[0]))
            throw ConsistencyFailure("dependent coroot fails to collapse in the quotient");
    }
    for (int j = 0; j < nsimple; ++j)
        for (int k = 0; k < nsimple; ++k) {
            RadicalScalar got = form_of(hs[j], hs[k]);
            RadicalScalar want(d.form(d.simple_roots[j].v, d.simple_roots[k].v));
            if (got != want)
                throw ConsistencyFailure("model form disagrees with the catalog gram at (" +
                                         std::to_string(j) + "," + std::to_string(k) + "): got " +
                                         got.to_string() + ", want " + want.to_string());
        }

    SuperLieAlgebra alg;
    alg.datum = d;
    alg.n_cartan = d.algebra_cartan_dim;
    alg.dim = alg.n_cartan + nroots;
    alg.coroot_slot.assign(nsimple, 0);
    for (int j = 0; j < nsimple; ++j) alg.coroot_slot[j] = (quotient && j == 2) ? 0 : j;

    std::vector<Mat<RadicalScalar>> bm;
    for (int t = 0; t < alg.n_cartan; ++t) {
        bm.push_back(hs[t]);
        alg.odd.push_back(false);
        alg.root_of.push_back(-1);
    }
    alg.vec_of_root.assign(nroots, -1);
    for (int r = 0; r < nroots; ++r) {
        alg.vec_of_root[r] = (int)bm.size();
        alg.root_of.push_back(r);
        alg.odd.push_back(d.all_roots[r].odd);
        bm.push_back(canonical_rep(rm[r], quotient));
    }

    /* express a Cartan matrix over the slot matrices */
    Mat<RadicalScalar> slotcols(s.n_total * s.n_total, alg.n_cartan);
    for (int t = 0; t < alg.n_cartan; ++t)
        for (int e = 0; e < s.n_total * s.n_total; ++e) slotcols.at(e, t) = bm[t].data[e];
    auto cartan_coords = [&](const Mat<RadicalScalar>& p) {
        std::vector<RadicalScalar> rhs(p.data.begin(), p.data.end());
        return solve_unique(slotcols, rhs);
    };

    auto scalar_multiple = [&](const Mat<RadicalScalar>& p, const Mat<RadicalScalar>& target) {
        size_t pos = 0;
        while (pos < target.data.size() && target.data[pos].is_zero()) ++pos;
        if (pos == target.data.size()) throw InternalError("zero target matrix");
        RadicalScalar lambda = p.data[pos] / target.data[pos];
        for (size_t e = 0; e < target.data.size(); ++e)
            if (p.data[e] != lambda * target.data[e])
                throw ConstructionFailure("bracket is not a multiple of the target root vector");
        return lambda;
    };

    alg.table.assign((size_t)alg.dim * alg.dim, SVec{});
    for (int i = 0; i < alg.dim; ++i)
        for (int j = i; j < alg.dim; ++j) {
            Mat<RadicalScalar> p =
                canonical_rep(mat_bracket(bm[i], alg.odd[i], bm[j], alg.odd[j]), quotient);
            SVec entry;
            if (mat_is_zero(p)) {
                alg.table[(size_t)i * alg.dim + j] = entry;
                continue;
            }
            Vec w(d.coordinate_dim, Rational(0));
            bool zero_weight = true;
            for (int t = 0; t < d.coordinate_dim; ++t) {
                if (alg.root_of[i] >= 0) w[t] += d.all_roots[alg.root_of[i]].v[t];
                if (alg.root_of[j] >= 0) w[t] += d.all_roots[alg.root_of[j]].v[t];
                if (!w[t].is_zero()) zero_weight = false;
            }
            if (zero_weight) {
                std::vector<RadicalScalar> x = cartan_coords(p);
                for (int t = 0; t < alg.n_cartan; ++t)
                    if (!x[t].is_zero()) entry.emplace_back(t, x[t]);
            } else {
                int target = d.root_index(w);
                if (target < 0)
                    throw ConstructionFailure("bracket weight is neither zero nor a root");
                RadicalScalar lambda = scalar_multiple(p, bm[alg.vec_of_root[target]]);
                entry = sv_unit(alg.vec_of_root[target], lambda);
            }
            alg.table[(size_t)i * alg.dim + j] = entry;
        }

    alg.form = Mat<RadicalScalar>(alg.dim, alg.dim);
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j) alg.form.at(i, j) = form_of(bm[i], bm[j]);

    MatrixModel model;
    model.spec = spec;
    model.n_even = s.n_even;
    model.n_total = s.n_total;
    if (!c_form.is_rational()) throw InternalError("irrational form scale");
    model.form_scale = c_form.rational_value();
    model.matrices = bm;
    model.odd = alg.odd;
    model.quotient_by_identity = quotient;

    Built out;
    out.algebra = std::move(alg);
    out.model = std::move(model);
    return out;
}

}  // namespace

SuperLieAlgebra matrix_model_algebra(const AlgebraSpec& spec) {
    return build_model(spec).algebra;
}

MatrixModel matrix_realization(const AlgebraSpec& spec) {
    return build_model(spec).model;
}

}  // namespace wmin

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/errors.hpp"
#include "wmin/involution.hpp"
#include "wmin/linalg.hpp"
#include "wmin/radical.hpp"
#include "wmin/rational.hpp"
#include "wmin/roots.hpp"

namespace wmin {

namespace {

const RadicalScalar kOne{Rational(1)};

Vec negated(const Vec& v) {
    Vec n = v;
    for (auto& c : n) c = -c;
    return n;
}

Mat<RadicalScalar> conj_mat(const Mat<RadicalScalar>& m) {
    Mat<RadicalScalar> out(m.rows, m.cols);
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c).conj();
    return out;
}

SVec column_to_svec(const Mat<RadicalScalar>& m, int col) {
    SVec out;
    int rows = static_cast<int>(m.rows);
    for (int r = 0; r < rows; ++r)
        if (!m.at(r, col).is_zero()) out.emplace_back(r, m.at(r, col));
    return out;
}

/* matrix of ad v on the whole algebra basis */
Mat<RadicalScalar> ad_matrix(const SuperLieAlgebra& alg, const SVec& v) {
    Mat<RadicalScalar> a(alg.dim, alg.dim);
    for (int j = 0; j < alg.dim; ++j) {
        SVec img = alg.bracket(v, sv_unit(j));
        for (const auto& [k, c] : img) a.at(k, j) = c;
    }
    return a;
}

/* representative simple-root index for each Cartan slot */
std::vector<int> slot_simple(const SuperLieAlgebra& alg) {
    std::vector<int> rep(alg.n_cartan, -1);
    for (size_t i = 0; i < alg.coroot_slot.size(); ++i) {
        int s = alg.coroot_slot[i];
        if (rep[s] < 0) rep[s] = static_cast<int>(i);
    }
    return rep;
}

/* coordinates inside a span, extracted through the invariant pairing with a
   dual list whose Gram against the span is invertible */
struct SpanCoords {
    const SuperLieAlgebra& alg;
    std::vector<SVec> span;
    std::vector<SVec> dual;
    Mat<RadicalScalar> gram_inv;

    SpanCoords(const SuperLieAlgebra& a, std::vector<SVec> s, std::vector<SVec> d)
        : alg(a), span(std::move(s)), dual(std::move(d)), gram_inv(0, 0) {
        int n = static_cast<int>(span.size());
        Mat<RadicalScalar> g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.at(i, j) = alg.form_pair(dual[i], span[j]);
        gram_inv = inverse(g);
    }

    std::vector<RadicalScalar> coords(const SVec& v) const {
        int n = static_cast<int>(span.size());
        std::vector<RadicalScalar> b(n, RadicalScalar(Rational(0)));
        for (int i = 0; i < n; ++i) b[i] = alg.form_pair(dual[i], v);
        std::vector<RadicalScalar> c(n, RadicalScalar(Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c[i] = c[i] + gram_inv.at(i, j) * b[j];
        return c;
    }

    /* exactness check: the coordinates must reproduce v */
    std::vector<RadicalScalar> coords_checked(const SVec& v) const {
        std::vector<RadicalScalar> c = coords(v);
        SVec rebuilt;
        for (size_t j = 0; j < span.size(); ++j)
            rebuilt = sv_add(rebuilt, sv_scale(span[j], c[j]));
        if (!sv_sub(rebuilt, v).empty())
            throw InternalError("vector lies outside the expected span");
        return c;
    }
};

}  // namespace

SVec ConjugateLinearMap::apply(const SVec& v) const {
    SVec out;
    for (const auto& [j, c] : v) {
        SVec col = column_to_svec(m, j);
        out = sv_add(out, sv_scale(col, c.conj()));
    }
    return out;
}

void check_involution(const SuperLieAlgebra& alg, const ConjugateLinearMap& phi) {
    const Mat<RadicalScalar>& m = phi.m;
    if (static_cast<int>(m.rows) != alg.dim || static_cast<int>(m.cols) != alg.dim)
        throw NotInvolution("map has the wrong shape");
    Mat<RadicalScalar> mc = conj_mat(m);
    Mat<RadicalScalar> sq = m * mc;
    if (!(sq == Mat<RadicalScalar>::identity(alg.dim)))
        throw NotInvolution("map squared is not the identity");

    std::vector<SVec> image(alg.dim);
    for (int i = 0; i < alg.dim; ++i) image[i] = phi.apply(sv_unit(i));
    for (int i = 0; i < alg.dim; ++i) {
        const SVec& pi = image[i];
        for (int j = 0; j < alg.dim; ++j) {
            const SVec& pj = image[j];
            SVec lhs = phi.apply(alg.bracket(i, j));
            SVec rhs = alg.bracket(pi, pj);
            if (!sv_sub(lhs, rhs).empty())
                throw ConsistencyFailure("conjugate-linear map is not a bracket automorphism at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
            RadicalScalar pf = alg.form_pair(pi, pj).conj();
            if (!(pf == alg.form.at(i, j)))
                throw ConsistencyFailure("conjugate-linear map breaks the form reality at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

ConjugateLinearMap omega_involution(const RootVectorBasis& basis, const Lambda& lambda) {
    const SuperLieAlgebra& alg = basis.alg;
    std::vector<RadicalScalar> w = omega_root_coeffs(alg, lambda);
    Mat<RadicalScalar> m(alg.dim, alg.dim);
    for (int h = 0; h < alg.n_cartan; ++h) m.at(h, h) = RadicalScalar(Rational(-1));
    const RootDatum& d = alg.datum;
    for (size_t r = 0; r < d.all_roots.size(); ++r) {
        int mi = d.root_index(negated(d.all_roots[r].v));
        m.at(alg.vec_of_root[mi], alg.vec_of_root[r]) = w[r];
    }
    return ConjugateLinearMap{m};
}

AlmostCompactData almost_compact(const SuperLieAlgebra& alg) {
    RootVectorBasis basis = good_choice(alg, lambda_zero(alg));
    ConjugateLinearMap phi = omega_involution(basis, basis.lambda);
    check_involution(basis.alg, phi);

    const SuperLieAlgebra& a = basis.alg;
    const RootDatum& d = a.datum;
    int ti = d.root_index(d.theta);
    int mi = d.root_index(negated(d.theta));
    int vt = a.vec_of_root[ti];
    int vm = a.vec_of_root[mi];
    RadicalScalar ii = RadicalScalar::i();
    RadicalScalar half(Rational(1, 2));
    SVec h_theta = a.coroot(d.theta);

    Sl2Triple t;
    t.x = sv_scale(sv_sub(sv_unit(vt), sv_unit(vm)), ii * half);
    SVec sum = sv_add(sv_unit(vt), sv_unit(vm));
    t.e = sv_scale(sv_add(sum, sv_scale(h_theta, ii)), half);
    t.f = sv_scale(sv_sub(sum, sv_scale(h_theta, ii)), half);

    if (!sv_sub(a.bracket(t.x, t.e), t.e).empty())
        throw ConsistencyFailure("[x,e] differs from e");
    if (!sv_add(a.bracket(t.x, t.f), t.f).empty())
        throw ConsistencyFailure("[x,f] differs from -f");
    if (!sv_sub(a.bracket(t.e, t.f), sv_scale(t.x, RadicalScalar(Rational(2)))).empty())
        throw ConsistencyFailure("[e,f] differs from 2x");
    if (!(a.form_pair(t.x, t.x) == RadicalScalar(Rational(1, 2))))
        throw ConsistencyFailure("(x|x) differs from 1/2");

    if (!sv_sub(phi.apply(t.e), t.e).empty())
        throw CompactnessFailure("involution does not fix e");
    if (!sv_sub(phi.apply(t.x), t.x).empty())
        throw CompactnessFailure("involution does not fix x");
    if (!sv_sub(phi.apply(t.f), t.f).empty())
        throw CompactnessFailure("involution does not fix f");

    GradedDecomposition grading = minimal_grading(a, t);
    std::vector<Component> comps = component_split(a, grading);
    for (const Component& comp : comps) {
        if (comp.is_center) continue;
        std::vector<SVec> rb = fixed_real_basis(basis, comp);
        Mat<RadicalScalar> k = killing_matrix(a, rb);
        check_negative_definite(k);
    }
    return AlmostCompactData{std::move(basis), std::move(phi), std::move(t)};
}

GradedDecomposition minimal_grading(const SuperLieAlgebra& alg, const Sl2Triple& t) {
    const RootDatum& d = alg.datum;
    Mat<RadicalScalar> adx = ad_matrix(alg, t.x);

    const Rational eigen[5] = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                               Rational(1)};
    GradedDecomposition g;
    g.eigenspaces.resize(5);
    int total = 0;
    for (int s = 0; s < 5; ++s) {
        Mat<RadicalScalar> shifted = adx;
        for (int i = 0; i < alg.dim; ++i)
            shifted.at(i, i) = shifted.at(i, i) - RadicalScalar(eigen[s]);
        std::vector<std::vector<RadicalScalar>> null = nullspace(shifted);
        bool odd_space = (s == 1 || s == 3);
        for (const auto& vec : null) {
            SVec sv;
            for (int i = 0; i < alg.dim; ++i)
                if (!vec[i].is_zero()) {
                    if (alg.odd[i] != odd_space)
                        throw ConsistencyFailure("grading eigenvector has the wrong parity");
                    sv.emplace_back(i, vec[i]);
                }
            g.eigenspaces[s].push_back(sv);
        }
        total += static_cast<int>(null.size());
    }
    if (total != alg.dim)
        throw ConsistencyFailure("grading eigenspaces do not fill the algebra");

    /* the extreme eigenspaces are the lines through f and e */
    auto is_line_through = [&](const std::vector<SVec>& space, const SVec& v) {
        if (space.size() != 1) return false;
        const SVec& b = space[0];
        if (b.empty() || v.empty()) return false;
        /* v = c * b for the ratio at b's leading support */
        RadicalScalar c;
        bool found = false;
        for (const auto& [i, cb] : b) {
            for (const auto& [j, cv] : v)
                if (j == i) {
                    c = cv / cb;
                    found = true;
                }
            if (found) break;
        }
        if (!found) return false;
        return sv_sub(v, sv_scale(b, c)).empty();
    };
    if (!is_line_through(g.eigenspaces[0], t.f))
        throw ConsistencyFailure("the -1 eigenspace is not the line through f");
    if (!is_line_through(g.eigenspaces[4], t.e))
        throw ConsistencyFailure("the +1 eigenspace is not the line through e");

    /* centralizer of the triple: Cartan kernel of theta, then the root
       vectors orthogonal to theta */
    std::vector<int> rep = slot_simple(alg);
    Mat<RadicalScalar> theta_row(1, alg.n_cartan);
    for (int j = 0; j < alg.n_cartan; ++j)
        theta_row.at(0, j) = RadicalScalar(d.form(d.theta, d.simple_roots[rep[j]].v));
    std::vector<std::vector<RadicalScalar>> hker = nullspace(theta_row);
    for (const auto& vec : hker) {
        SVec sv;
        for (int j = 0; j < alg.n_cartan; ++j)
            if (!vec[j].is_zero()) sv.emplace_back(j, vec[j]);
        g.g_natural.push_back(sv);
    }
    for (size_t r = 0; r < d.all_roots.size(); ++r) {
        const Root& a = d.all_roots[r];
        Rational pr = d.form(a.v, d.theta);
        if (a.odd) {
            if (!(pr == Rational(1) || pr == Rational(-1)))
                throw ConsistencyFailure("odd root outside the half-integer grading");
            continue;
        }
        if (pr.is_zero()) {
            g.g_natural.push_back(sv_unit(alg.vec_of_root[r]));
        } else {
            bool extreme = (a.v == d.theta) || (a.v == negated(d.theta));
            if (!extreme || !(pr == Rational(2) || pr == Rational(-2)))
                throw ConsistencyFailure("even root with unexpected grading");
        }
    }

    if (static_cast<int>(g.g_natural.size()) + 1 != static_cast<int>(g.eigenspaces[2].size()))
        throw ConsistencyFailure("centralizer does not complement the grading element");
    for (const SVec& v : g.g_natural) {
        if (!alg.bracket(v, t.e).empty() || !alg.bracket(v, t.x).empty() ||
            !alg.bracket(v, t.f).empty())
            throw ConsistencyFailure("centralizer candidate moves the triple");
        if (!alg.form_pair(v, t.x).is_zero())
            throw ConsistencyFailure("centralizer candidate is not orthogonal to x");
    }
    return g;
}

std::vector<Component> component_split(const SuperLieAlgebra& alg,
                                       const GradedDecomposition& grading) {
    const RootDatum& d = alg.datum;
    std::vector<int> flat;  /* all_roots indices orthogonal to theta */
    for (size_t r = 0; r < d.all_roots.size(); ++r)
        if (!d.all_roots[r].odd && d.form(d.all_roots[r].v, d.theta).is_zero())
            flat.push_back(static_cast<int>(r));

    /* connected clusters under (a|b) != 0 */
    int n = static_cast<int>(flat.size());
    std::vector<int> cluster_of(n, -1);
    int n_clusters = 0;
    for (int seed = 0; seed < n; ++seed) {
        if (cluster_of[seed] >= 0) continue;
        std::vector<int> queue{seed};
        cluster_of[seed] = n_clusters;
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            for (int other = 0; other < n; ++other) {
                if (cluster_of[other] >= 0) continue;
                if (!d.form(d.all_roots[flat[cur]].v, d.all_roots[flat[other]].v).is_zero()) {
                    cluster_of[other] = n_clusters;
                    queue.push_back(other);
                }
            }
        }
        ++n_clusters;
    }

    std::vector<Component> clusters;
    for (int c = 0; c < n_clusters; ++c) {
        Component comp;
        for (int i = 0; i < n; ++i)
            if (cluster_of[i] == c) comp.roots.push_back(flat[i]);

        /* internal simple roots: positive cluster roots that are not the sum
           of two positive cluster roots */
        std::vector<int> pos;
        for (int r : comp.roots)
            if (d.is_positive(d.all_roots[r].v)) pos.push_back(r);
        std::vector<int> simple;
        for (int r : pos) {
            bool decomposable = false;
            for (int p : pos) {
                for (int q : pos) {
                    Vec sum(d.coordinate_dim, Rational(0));
                    for (int tt = 0; tt < d.coordinate_dim; ++tt)
                        sum[tt] = d.all_roots[p].v[tt] + d.all_roots[q].v[tt];
                    if (sum == d.all_roots[r].v) decomposable = true;
                }
            }
            if (!decomposable) simple.push_back(r);
        }
        comp.rank = static_cast<int>(simple.size());
        for (int s : simple) comp.cartan.push_back(alg.coroot(d.all_roots[s].v));

        /* sanity: the rank equals the dimension of the root span */
        Mat<Rational> span(static_cast<int>(comp.roots.size()), d.coordinate_dim);
        for (size_t i = 0; i < comp.roots.size(); ++i)
            for (int tt = 0; tt < d.coordinate_dim; ++tt)
                span.at(static_cast<int>(i), tt) = d.all_roots[comp.roots[i]].v[tt];
        if (static_cast<int>(rank(span)) != comp.rank)
            throw ConsistencyFailure("component rank disagrees with its root span");

        /* internal highest root: the last cluster root in catalog order */
        comp.theta_i = d.all_roots[comp.roots.back()].v;
        Rational hmax = d.height(comp.theta_i);
        for (int r : comp.roots)
            if (d.height(d.all_roots[r].v) > hmax)
                throw ConsistencyFailure("component highest root is not maximal");
        comp.u = d.form(comp.theta_i, comp.theta_i);
        if (comp.u.is_zero()) throw ConsistencyFailure("component highest root is isotropic");
        comp.dim = static_cast<int>(comp.roots.size()) + comp.rank;
        clusters.push_back(std::move(comp));
    }

    /* center: Cartan vectors killed by theta and by every flat root */
    std::vector<int> rep = slot_simple(alg);
    Mat<RadicalScalar> rows(1 + n, alg.n_cartan);
    for (int j = 0; j < alg.n_cartan; ++j)
        rows.at(0, j) = RadicalScalar(d.form(d.theta, d.simple_roots[rep[j]].v));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < alg.n_cartan; ++j)
            rows.at(1 + i, j) =
                RadicalScalar(d.form(d.all_roots[flat[i]].v, d.simple_roots[rep[j]].v));
    std::vector<std::vector<RadicalScalar>> zker = nullspace(rows);

    std::vector<Component> out;
    if (!zker.empty()) {
        Component center;
        center.is_center = true;
        for (const auto& vec : zker) {
            SVec sv;
            for (int j = 0; j < alg.n_cartan; ++j)
                if (!vec[j].is_zero()) sv.emplace_back(j, vec[j]);
            center.cartan.push_back(sv);
        }
        center.dim = center.rank = static_cast<int>(zker.size());
        center.u = Rational(2);
        out.push_back(std::move(center));
    }

    /* order: ascending (dim, rank), ties by descending largest simple-root
       index appearing among the cluster roots */
    auto max_simple_index = [&](const Component& comp) {
        int best = -1;
        for (int r : comp.roots) {
            Vec co = d.simple_coords(d.all_roots[r].v);
            for (int j = static_cast<int>(co.size()) - 1; j >= 0; --j)
                if (!co[j].is_zero()) {
                    best = std::max(best, j);
                    break;
                }
        }
        return best;
    };
    std::stable_sort(clusters.begin(), clusters.end(),
                     [&](const Component& lhs, const Component& rhs) {
                         if (lhs.dim != rhs.dim) return lhs.dim < rhs.dim;
                         if (lhs.rank != rhs.rank) return lhs.rank < rhs.rank;
                         return max_simple_index(lhs) > max_simple_index(rhs);
                     });
    for (auto& c : clusters) out.push_back(std::move(c));

    int total = 0;
    for (const Component& c : out) total += c.dim;
    if (total != static_cast<int>(grading.g_natural.size()))
        throw ConsistencyFailure("components do not fill the centralizer");
    return out;
}

std::vector<SVec> fixed_real_basis(const RootVectorBasis& basis, const Component& comp) {
    const SuperLieAlgebra& alg = basis.alg;
    const RootDatum& d = alg.datum;
    RadicalScalar ii = RadicalScalar::i();
    std::vector<SVec> out;
    for (const SVec& h : comp.cartan) out.push_back(sv_scale(h, ii));
    for (int r : comp.roots) {
        const Root& a = d.all_roots[r];
        if (!d.is_positive(a.v)) continue;
        int i1 = alg.vec_of_root[r];
        int i2 = alg.vec_of_root[d.root_index(negated(a.v))];
        SVec mirrored = sv_unit(i2, basis.t[r]);
        out.push_back(sv_add(sv_unit(i1), mirrored));
        out.push_back(sv_scale(sv_sub(sv_unit(i1), mirrored), ii));
    }
    return out;
}

Mat<RadicalScalar> killing_matrix(const SuperLieAlgebra& alg, const std::vector<SVec>& span) {
    int n = static_cast<int>(span.size());
    SpanCoords coords(alg, span, span);
    std::vector<Mat<RadicalScalar>> ad;
    ad.reserve(n);
    for (int i = 0; i < n; ++i) {
        Mat<RadicalScalar> m(n, n);
        for (int j = 0; j < n; ++j) {
            SVec br = alg.bracket(span[i], span[j]);
            std::vector<RadicalScalar> c = coords.coords_checked(br);
            for (int k = 0; k < n; ++k) m.at(k, j) = c[k];
        }
        ad.push_back(std::move(m));
    }
    Mat<RadicalScalar> killing(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RadicalScalar tr{Rational(0)};
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) tr = tr + ad[i].at(k, l) * ad[j].at(l, k);
            if (!tr.is_real()) throw InternalError("Killing form entry is not real");
            killing.at(i, j) = tr;
        }
    return killing;
}

void check_negative_definite(const Mat<RadicalScalar>& gram) {
    int n = static_cast<int>(gram.rows);
    Mat<RadicalScalar> a = gram;
    /* combination of original basis vectors realizing each pivot */
    std::vector<std::vector<RadicalScalar>> comb(n,
                                                 std::vector<RadicalScalar>(n, RadicalScalar(Rational(0))));
    for (int i = 0; i < n; ++i) comb[i][i] = kOne;
    for (int k = 0; k < n; ++k) {
        RadicalScalar pivot = a.at(k, k);
        if (!pivot.is_real()) throw InternalError("Killing pivot is not real");
        if (pivot.sign() >= 0) {
            std::string witness;
            for (int j = 0; j < n; ++j) {
                if (comb[k][j].is_zero()) continue;
                if (!witness.empty()) witness += " + ";
                witness += "(" + comb[k][j].to_string() + ")*v" + std::to_string(j);
            }
            throw CompactnessFailure("nonnegative Killing norm " + pivot.to_string() +
                                     " on " + witness);
        }
        /* symmetric rank-one update; symmetry of the trailing block is
           preserved because every (r, c) pair with r, c > k is visited */
        for (int r = k + 1; r < n; ++r) {
            RadicalScalar f = a.at(r, k) / pivot;
            if (f.is_zero()) continue;
            for (int c = k; c < n; ++c) a.at(r, c) = a.at(r, c) - f * a.at(k, c);
            for (int j = 0; j < n; ++j) comb[r][j] = comb[r][j] - f * comb[k][j];
        }
    }
}

std::vector<int> short_grading(const SuperLieAlgebra& alg) {
    Family fam = alg.datum.spec.family;
    if (fam != Family::SL2m && fam != Family::PSL22)
        throw NotTypeI("short grading requires sl(2|m) or psl(2|2)");
    std::vector<int> deg(alg.dim, 0);
    for (int i = alg.n_cartan; i < alg.dim; ++i) {
        const Root& a = alg.root_at(i);
        Rational charge = a.v[0] + a.v[1];
        int value = 0;
        if (charge == Rational(1))
            value = 1;
        else if (charge == Rational(-1))
            value = -1;
        else if (!charge.is_zero())
            throw ConsistencyFailure("root outside the short grading");
        if ((value != 0) != a.odd)
            throw ConsistencyFailure("short grading disagrees with parity");
        deg[i] = value;
    }
    return deg;
}

Mat<RadicalScalar> delta_automorphism(const SuperLieAlgebra& alg, const RadicalScalar& lambda) {
    if (lambda.is_zero()) throw BadParameter("scaling parameter must be nonzero");
    std::vector<int> deg = short_grading(alg);
    /* degree additivity makes the diagonal map an automorphism for any
       nonzero lambda; verify it on the stored table once */
    for (int i = 0; i < alg.dim; ++i)
        for (int j = i; j < alg.dim; ++j) {
            SVec br = alg.bracket_basis(i, j);
            for (const auto& [k, c] : br) {
                (void)c;
                if (deg[k] != deg[i] + deg[j])
                    throw ConsistencyFailure("bracket violates short-grading additivity");
            }
        }
    Mat<RadicalScalar> m(alg.dim, alg.dim);
    RadicalScalar inv = lambda.inverse();
    for (int i = 0; i < alg.dim; ++i)
        m.at(i, i) = deg[i] == 0 ? kOne : (deg[i] == 1 ? lambda : inv);
    return m;
}

int half_space_intertwiners(const SuperLieAlgebra& alg, const ConjugateLinearMap& phi,
                            const GradedDecomposition& grading,
                            const std::vector<Component>& components) {
    const std::vector<SVec>& v_minus = grading.eigenspaces[1];
    const std::vector<SVec>& v_plus = grading.eigenspaces[3];
    int dsp = static_cast<int>(v_minus.size());
    if (dsp == 0) return 0;
    if (v_plus.size() != v_minus.size())
        throw ConsistencyFailure("half eigenspaces have different dimensions");
    SpanCoords coords(alg, v_minus, v_plus);

    /* generators of the centralizer: component Cartans plus the root
       vectors of each internal simple root and its negative */
    std::vector<SVec> gens;
    const RootDatum& d = alg.datum;
    for (const Component& comp : components) {
        for (const SVec& h : comp.cartan) gens.push_back(h);
        if (comp.is_center) continue;
        for (int r : comp.roots) {
            const Root& a = d.all_roots[r];
            if (!d.is_positive(a.v)) continue;
            bool simple_here = false;
            for (const SVec& h : comp.cartan)
                if (sv_sub(h, alg.coroot(a.v)).empty()) simple_here = true;
            if (!simple_here) continue;
            gens.push_back(sv_unit(alg.vec_of_root[r]));
            gens.push_back(sv_unit(alg.vec_of_root[d.root_index(negated(a.v))]));
        }
    }

    int unknowns = dsp * dsp;
    std::vector<std::vector<RadicalScalar>> rows;
    for (const SVec& g : gens) {
        SVec pg = phi.apply(g);
        Mat<RadicalScalar> a(dsp, dsp), b(dsp, dsp);
        for (int j = 0; j < dsp; ++j) {
            std::vector<RadicalScalar> ca = coords.coords_checked(alg.bracket(g, v_minus[j]));
            std::vector<RadicalScalar> cb = coords.coords_checked(alg.bracket(pg, v_minus[j]));
            for (int i = 0; i < dsp; ++i) {
                a.at(i, j) = ca[i];
                b.at(i, j) = cb[i];
            }
        }
        /* Psi conj(A) = B Psi, unknowns Psi_{r,c} at index r*dsp + c */
        for (int r = 0; r < dsp; ++r)
            for (int c = 0; c < dsp; ++c) {
                std::vector<RadicalScalar> row(unknowns, RadicalScalar(Rational(0)));
                for (int k = 0; k < dsp; ++k) {
                    row[r * dsp + k] = row[r * dsp + k] + a.at(k, c).conj();
                    row[k * dsp + c] = row[k * dsp + c] - b.at(r, k);
                }
                bool nonzero = false;
                for (const auto& e : row)
                    if (!e.is_zero()) nonzero = true;
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    Mat<RadicalScalar> sys(static_cast<int>(rows.size()), unknowns);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < unknowns; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
    std::vector<std::vector<RadicalScalar>> null = nullspace(sys);

    if (null.size() == 1) {
        /* the generator must be proportional to phi's restriction */
        Mat<RadicalScalar> rmat(dsp, dsp);
        for (int j = 0; j < dsp; ++j) {
            std::vector<RadicalScalar> c = coords.coords_checked(phi.apply(v_minus[j]));
            for (int i = 0; i < dsp; ++i) rmat.at(i, j) = c[i];
        }
        RadicalScalar ratio;
        bool found = false;
        for (int r = 0; r < dsp && !found; ++r)
            for (int c = 0; c < dsp && !found; ++c)
                if (!rmat.at(r, c).is_zero()) {
                    ratio = null[0][r * dsp + c] / rmat.at(r, c);
                    found = true;
                }
        if (!found) throw ConsistencyFailure("involution restriction vanishes");
        for (int r = 0; r < dsp; ++r)
            for (int c = 0; c < dsp; ++c)
                if (!(null[0][r * dsp + c] == ratio * rmat.at(r, c)))
                    throw ConsistencyFailure(
                        "intertwiner generator is not proportional to the involution at entry (" +
                        std::to_string(r) + "," + std::to_string(c) + ")");
    }
    return static_cast<int>(null.size());
}

}  // namespace wmin

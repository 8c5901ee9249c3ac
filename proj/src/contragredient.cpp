#include <string>
#include <utility>
#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/errors.hpp"

/*
 * Generation of a basic Lie superalgebra from its simple-root data alone,
 * used for the families without a matrix model here (D(2,1;a), F(4), G(3))
 * and as an independent cross-check for the others.  Positive root vectors
 * are built height by height: every candidate [e_i, X_{a-alpha_i}] is
 * reduced against the f-descents, the resulting coefficient rows must have
 * rank exactly one, and the first nonzero candidate becomes X_a.  Negative
 * root vectors mirror the positive ones through the involution
 * e_i -> -f_i, f_i -> -(-1)^{p_i} e_i, h -> -h, and the whole bracket table
 * follows from the defining relations by the graded Jacobi identity.  The
 * invariant form is seeded by (e_i|f_i) = 1, (h_i|h_j) = (alpha_i|alpha_j)
 * and propagated by invariance; a final diagonal rescale of the negative
 * vectors makes (X_a|X_{-a}) = 1 for every positive root a.
 */

namespace wmin {

namespace {

struct Builder {
    RootDatum d;
    int nsimple = 0;
    int npos = 0;
    int nroots = 0;
    int ncartan = 0;

    std::vector<int> all_of_pos;    /* positive index -> all_roots index */
    std::vector<int> pos_of_all;    /* all_roots index -> positive index or -1 */
    std::vector<int> neg_of_pos;    /* positive index -> all_roots index of -a */
    std::vector<int> simple_of_pos; /* positive index -> simple index or -1 */

    std::vector<std::vector<RadicalScalar>> etab; /* [simple][pos] */
    std::vector<std::vector<RadicalScalar>> ftab; /* [simple][pos] */
    std::vector<int> parent_gen;                  /* pos -> simple index */
    std::vector<int> parent_rest;                 /* pos -> pos index of a - alpha_i */

    std::vector<SVec> memo;
    std::vector<bool> have;

    int vb(int all_index) const { return ncartan + all_index; }
    bool podd(int simple) const { return d.simple_roots[simple].odd; }

    Rational pairing(const Vec& x, const Vec& y) const { return d.form(x, y); }

    Vec vsub(const Vec& x, const Vec& y) const {
        Vec out(x.size(), Rational(0));
        for (size_t t = 0; t < x.size(); ++t) out[t] = x[t] - y[t];
        return out;
    }
    Vec vadd(const Vec& x, const Vec& y) const {
        Vec out(x.size(), Rational(0));
        for (size_t t = 0; t < x.size(); ++t) out[t] = x[t] + y[t];
        return out;
    }
    Vec vneg(const Vec& x) const {
        Vec out(x.size(), Rational(0));
        for (size_t t = 0; t < x.size(); ++t) out[t] = -x[t];
        return out;
    }

    /* [e_i, X] and [f_i, X] for a single basis element, over the final basis */
    SVec gen_on_basis(bool use_e, int i, int basis_index) {
        if (basis_index < ncartan) {
            /* [g, h_t] = -(alpha_t | wt(g)) g */
            Rational c = pairing(d.simple_roots[basis_index].v, d.simple_roots[i].v);
            int self = vb(d.root_index(use_e ? d.simple_roots[i].v : vneg(d.simple_roots[i].v)));
            return sv_unit(self, RadicalScalar(use_e ? -c : c));
        }
        int a = basis_index - ncartan;
        const Root& root = d.all_roots[a];
        bool positive = pos_of_all[a] >= 0;
        if (use_e) {
            if (positive) {
                int p = pos_of_all[a];
                Vec target = vadd(root.v, d.simple_roots[i].v);
                int ti = d.root_index(target);
                if (ti < 0 || etab[i][p].is_zero()) return {};
                return sv_unit(vb(ti), etab[i][p]);
            }
            int p = pos_of_all[d.root_index(vneg(root.v))];
            if (simple_of_pos[p] >= 0) {
                /* [e_i, f_s] = delta_is h_i */
                return (simple_of_pos[p] == i) ? sv_unit(i) : SVec{};
            }
            RadicalScalar c = ftab[i][p];
            if (c.is_zero()) return {};
            Vec target = vneg(vsub(d.all_roots[all_of_pos[p]].v, d.simple_roots[i].v));
            RadicalScalar sgn(podd(i) ? 1 : -1);
            return sv_unit(vb(d.root_index(target)), sgn * c);
        }
        if (positive) {
            int p = pos_of_all[a];
            if (simple_of_pos[p] >= 0) {
                /* [f_i, e_s] = -(-1)^{p_i p_s} delta_is h_s */
                if (simple_of_pos[p] != i) return {};
                return sv_unit(i, RadicalScalar(podd(i) ? 1 : -1));
            }
            RadicalScalar c = ftab[i][p];
            if (c.is_zero()) return {};
            Vec target = vsub(root.v, d.simple_roots[i].v);
            return sv_unit(vb(d.root_index(target)), c);
        }
        int p = pos_of_all[d.root_index(vneg(root.v))];
        RadicalScalar c = etab[i][p];
        if (c.is_zero()) return {};
        Vec target = vneg(vadd(d.all_roots[all_of_pos[p]].v, d.simple_roots[i].v));
        return sv_unit(vb(d.root_index(target)), -c);
    }

    SVec gen_on_svec(bool use_e, int i, const SVec& v) {
        SVec out;
        for (const auto& [k, c] : v) out = sv_add(out, sv_scale(gen_on_basis(use_e, i, k), c));
        return out;
    }

    /* [X_a, v] with a given as an all_roots index and v over the final basis */
    SVec root_on_svec(int a, const SVec& v) {
        SVec out;
        for (const auto& [k, c] : v) {
            if (k < ncartan) {
                Rational w = pairing(d.simple_roots[k].v, d.all_roots[a].v);
                out = sv_add(out, sv_unit(vb(a), RadicalScalar(-w) * c));
            } else {
                out = sv_add(out, sv_scale(pair_bracket(a, k - ncartan), c));
            }
        }
        return out;
    }

    SVec pair_bracket(int a, int b) {
        size_t key = (size_t)a * nroots + b;
        if (have[key]) return memo[key];
        const Root& ra = d.all_roots[a];
        bool positive = pos_of_all[a] >= 0;
        int p = positive ? pos_of_all[a] : pos_of_all[d.root_index(vneg(ra.v))];
        SVec out;
        if (simple_of_pos[p] >= 0) {
            out = gen_on_basis(positive, simple_of_pos[p], vb(b));
        } else {
            /* X_a = [e_g, X_rest] for positive a, X_a = -[f_g, X_rest] for
               negative a; expand [[g, X_rest], X_b] by the Jacobi identity */
            int g = parent_gen[p];
            int rest_pos = parent_rest[p];
            int rest = positive ? all_of_pos[rest_pos]
                                : d.root_index(vneg(d.all_roots[all_of_pos[rest_pos]].v));
            bool rest_odd = d.all_roots[rest].odd;
            SVec t1 = gen_on_svec(positive, g, pair_bracket(rest, b));
            SVec gb = gen_on_basis(positive, g, vb(b));
            SVec t2 = root_on_svec(rest, gb);
            RadicalScalar m2((podd(g) && rest_odd) ? 1 : -1);
            out = sv_add(t1, sv_scale(t2, m2));
            if (!positive) out = sv_scale(out, RadicalScalar(-1));
        }
        memo[key] = out;
        have[key] = true;
        return out;
    }
};

}  // namespace

SuperLieAlgebra contragredient_algebra(const AlgebraSpec& spec) {
    Builder bl;
    bl.d = root_system(spec);
    const RootDatum& d = bl.d;
    bl.nsimple = (int)d.simple_roots.size();
    bl.npos = (int)d.positive_roots.size();
    bl.nroots = (int)d.all_roots.size();
    bl.ncartan = d.algebra_cartan_dim;
    if (bl.ncartan != bl.nsimple || d.cartan_dim != bl.nsimple)
        throw UnsupportedFamily("generation needs an invertible simple-root gram: " + spec.name());

    bl.all_of_pos.assign(bl.npos, -1);
    bl.pos_of_all.assign(bl.nroots, -1);
    bl.neg_of_pos.assign(bl.npos, -1);
    bl.simple_of_pos.assign(bl.npos, -1);
    for (int p = 0; p < bl.npos; ++p) {
        const Vec& v = d.positive_roots[p].v;
        bl.all_of_pos[p] = d.root_index(v);
        bl.pos_of_all[bl.all_of_pos[p]] = p;
        bl.neg_of_pos[p] = d.root_index(bl.vneg(v));
        for (int i = 0; i < bl.nsimple; ++i)
            if (d.simple_roots[i].v == v) bl.simple_of_pos[p] = i;
    }

    bl.etab.assign(bl.nsimple, std::vector<RadicalScalar>(bl.npos, RadicalScalar(0)));
    bl.ftab.assign(bl.nsimple, std::vector<RadicalScalar>(bl.npos, RadicalScalar(0)));
    bl.parent_gen.assign(bl.npos, -1);
    bl.parent_rest.assign(bl.npos, -1);

    /* positive roots in height order; candidates [e_i, X_{a - alpha_i}]
       reduced against the f-descents must give coefficient rows of rank
       exactly one */
    for (int p = 0; p < bl.npos; ++p) {
        if (bl.simple_of_pos[p] >= 0) continue;
        const Vec& alpha = d.positive_roots[p].v;
        std::vector<int> cands;
        std::vector<int> cand_rest;
        for (int i = 0; i < bl.nsimple; ++i) {
            int q = d.positive_index(bl.vsub(alpha, d.simple_roots[i].v));
            if (q >= 0) {
                cands.push_back(i);
                cand_rest.push_back(q);
            }
        }
        if (cands.empty()) throw ConstructionFailure("positive root with no simple descent");
        std::vector<std::vector<RadicalScalar>> rows;
        for (size_t ci = 0; ci < cands.size(); ++ci) {
            int i = cands[ci];
            int q = cand_rest[ci];
            const Vec& beta = d.positive_roots[q].v;
            std::vector<RadicalScalar> row(bl.nsimple, RadicalScalar(0));
            row[i] += RadicalScalar(bl.podd(i) ? 1 : -1) *
                      RadicalScalar(bl.pairing(d.simple_roots[i].v, beta));
            if (bl.simple_of_pos[q] >= 0) {
                int sidx = bl.simple_of_pos[q];
                Rational c = bl.pairing(d.simple_roots[sidx].v, d.simple_roots[i].v);
                int sgn = 1;
                if (bl.podd(i) && bl.podd(sidx)) sgn = -sgn;
                if (bl.podd(sidx)) sgn = -sgn;
                row[sidx] += RadicalScalar(sgn) * RadicalScalar(c);
            } else {
                for (int j = 0; j < bl.nsimple; ++j) {
                    if (bl.ftab[j][q].is_zero()) continue;
                    int t = d.positive_index(bl.vsub(beta, d.simple_roots[j].v));
                    RadicalScalar e = bl.etab[i][t];
                    if (e.is_zero()) continue;
                    RadicalScalar sgn((bl.podd(i) && bl.podd(j)) ? -1 : 1);
                    row[j] += sgn * bl.ftab[j][q] * e;
                }
            }
            rows.push_back(std::move(row));
        }
        int chosen = -1;
        for (size_t ci = 0; ci < rows.size() && chosen < 0; ++ci)
            for (int j = 0; j < bl.nsimple; ++j)
                if (!rows[ci][j].is_zero()) {
                    chosen = (int)ci;
                    break;
                }
        if (chosen < 0) throw ConstructionFailure("weight space collapses to zero");
        for (size_t ci = 0; ci < rows.size(); ++ci)
            for (size_t cj = ci + 1; cj < rows.size(); ++cj)
                for (int u = 0; u < bl.nsimple; ++u)
                    for (int v = u + 1; v < bl.nsimple; ++v)
                        if (rows[ci][u] * rows[cj][v] != rows[ci][v] * rows[cj][u])
                            throw ConstructionFailure("weight space has dimension above one");
        int jstar = 0;
        while (rows[chosen][jstar].is_zero()) ++jstar;
        bl.parent_gen[p] = cands[chosen];
        bl.parent_rest[p] = cand_rest[chosen];
        bl.etab[cands[chosen]][cand_rest[chosen]] = RadicalScalar(1);
        for (size_t ci = 0; ci < rows.size(); ++ci) {
            if ((int)ci == chosen) continue;
            bl.etab[cands[ci]][cand_rest[ci]] = rows[ci][jstar] / rows[chosen][jstar];
        }
        for (int j = 0; j < bl.nsimple; ++j) bl.ftab[j][p] = rows[chosen][j];
    }

    bl.memo.assign((size_t)bl.nroots * bl.nroots, SVec{});
    bl.have.assign((size_t)bl.nroots * bl.nroots, false);

    /* pairing normalization: q_a = (X_a | X_{-a}) from the invariance
       recursion, then rescale the negative vectors by 1/q_a */
    std::vector<RadicalScalar> qpos(bl.npos, RadicalScalar(1));
    for (int p = 0; p < bl.npos; ++p) {
        if (bl.simple_of_pos[p] >= 0) continue;
        int g = bl.parent_gen[p];
        int rest = bl.all_of_pos[bl.parent_rest[p]];
        SVec br = bl.pair_bracket(rest, bl.neg_of_pos[p]);
        int want = bl.vb(d.root_index(bl.vneg(d.simple_roots[g].v)));
        RadicalScalar q(0);
        for (const auto& [k, c] : br) {
            if (k != want) throw ConstructionFailure("descent leaves the expected line");
            q = c;
        }
        if (q.is_zero()) throw ConstructionFailure("degenerate root pairing");
        qpos[p] = q;
    }

    SuperLieAlgebra alg;
    alg.datum = d;
    alg.n_cartan = bl.ncartan;
    alg.dim = bl.ncartan + bl.nroots;
    alg.coroot_slot.assign(bl.nsimple, 0);
    for (int j = 0; j < bl.nsimple; ++j) alg.coroot_slot[j] = j;
    alg.odd.assign(alg.dim, false);
    alg.root_of.assign(alg.dim, -1);
    alg.vec_of_root.assign(bl.nroots, -1);
    for (int r = 0; r < bl.nroots; ++r) {
        alg.vec_of_root[r] = bl.ncartan + r;
        alg.root_of[bl.ncartan + r] = r;
        alg.odd[bl.ncartan + r] = d.all_roots[r].odd;
    }

    /* diagonal rescale factors per basis index */
    std::vector<RadicalScalar> scale(alg.dim, RadicalScalar(1));
    for (int p = 0; p < bl.npos; ++p)
        scale[bl.vb(bl.neg_of_pos[p])] = RadicalScalar(1) / qpos[p];

    alg.table.assign((size_t)alg.dim * alg.dim, SVec{});
    for (int i = 0; i < alg.dim; ++i)
        for (int j = i; j < alg.dim; ++j) {
            SVec entry;
            if (i < bl.ncartan && j < bl.ncartan) {
                alg.table[(size_t)i * alg.dim + j] = entry;
                continue;
            }
            if (i < bl.ncartan) {
                Rational c = bl.pairing(d.simple_roots[i].v, d.all_roots[j - bl.ncartan].v);
                entry = sv_unit(j, RadicalScalar(c));
            } else {
                entry = bl.pair_bracket(i - bl.ncartan, j - bl.ncartan);
            }
            SVec rescaled;
            for (const auto& [k, c] : entry) {
                RadicalScalar nc = c * scale[i] * scale[j] / scale[k];
                if (!nc.is_zero()) rescaled.emplace_back(k, nc);
            }
            alg.table[(size_t)i * alg.dim + j] = rescaled;
        }

    alg.form = Mat<RadicalScalar>(alg.dim, alg.dim);
    for (int s = 0; s < bl.nsimple; ++s)
        for (int t = 0; t < bl.nsimple; ++t)
            alg.form.at(s, t) = RadicalScalar(bl.pairing(d.simple_roots[s].v, d.simple_roots[t].v));
    for (int p = 0; p < bl.npos; ++p) {
        int vpos = bl.vb(bl.all_of_pos[p]);
        int vneg = bl.vb(bl.neg_of_pos[p]);
        alg.form.at(vpos, vneg) = RadicalScalar(1);
        alg.form.at(vneg, vpos) = RadicalScalar(d.positive_roots[p].odd ? -1 : 1);
    }
    return alg;
}

}  // namespace wmin

#include "wmin/algebra.hpp"

#include <algorithm>
#include <string>

#include "wmin/errors.hpp"

namespace wmin {

SVec sv_unit(int index) { return {{index, RadicalScalar(1)}}; }

SVec sv_unit(int index, RadicalScalar coeff) {
    if (coeff.is_zero()) return {};
    SVec out;
    out.emplace_back(index, std::move(coeff));
    return out;
}

SVec sv_add(const SVec& a, const SVec& b) {
    SVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0;
    size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            RadicalScalar c = a[i].second + b[j].second;
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

SVec sv_scale(const SVec& v, const RadicalScalar& c) {
    if (c.is_zero()) return {};
    SVec out;
    out.reserve(v.size());
    for (const auto& [k, x] : v) {
        RadicalScalar y = x * c;
        if (!y.is_zero()) out.emplace_back(k, std::move(y));
    }
    return out;
}

SVec sv_sub(const SVec& a, const SVec& b) { return sv_add(a, sv_scale(b, RadicalScalar(-1))); }

SVec sv_conj(const SVec& v) {
    SVec out;
    out.reserve(v.size());
    for (const auto& [k, x] : v) out.emplace_back(k, x.conj());
    return out;
}

bool sv_is_zero(const SVec& v) { return v.empty(); }

SVec SuperLieAlgebra::bracket(int i, int j) const {
    if (i <= j) return table[i * dim + j];
    /* [b_i, b_j] = -(-1)^{p_i p_j} [b_j, b_i] */
    RadicalScalar sign((odd[i] && odd[j]) ? 1 : -1);
    return sv_scale(table[j * dim + i], sign);
}

SVec SuperLieAlgebra::bracket(const SVec& a, const SVec& b) const {
    SVec out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            const SVec& t = (i <= j) ? table[i * dim + j] : table[j * dim + i];
            if (t.empty()) continue;
            RadicalScalar c = x * y;
            if (i > j && !(odd[i] && odd[j])) c = -c;
            out = sv_add(out, sv_scale(t, c));
        }
    return out;
}

RadicalScalar SuperLieAlgebra::form_pair(const SVec& a, const SVec& b) const {
    RadicalScalar s(0);
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            const RadicalScalar& f = form.at(i, j);
            if (!f.is_zero()) s += x * y * f;
        }
    return s;
}

SVec SuperLieAlgebra::coroot(const Vec& r) const {
    std::vector<Rational> coords = datum.simple_coords(r);
    std::vector<RadicalScalar> slot(n_cartan, RadicalScalar(0));
    for (size_t j = 0; j < coords.size(); ++j) slot[coroot_slot[j]] += RadicalScalar(coords[j]);
    SVec out;
    for (int s = 0; s < n_cartan; ++s)
        if (!slot[s].is_zero()) out.emplace_back(s, slot[s]);
    return out;
}

SuperLieAlgebra build_algebra(const AlgebraSpec& spec) {
    switch (spec.family) {
        case Family::SL2m:
        case Family::PSL22:
        case Family::SPO2m:
        case Family::OSP4m:
            return matrix_model_algebra(spec);
        case Family::D21a:
        case Family::F4:
        case Family::G3:
            return contragredient_algebra(spec);
    }
    throw InternalError("unhandled family");
}

void check_super_jacobi(const SuperLieAlgebra& alg) {
    for (int a = 0; a < alg.dim; ++a)
        for (int b = 0; b < alg.dim; ++b) {
            SVec ab = alg.bracket(a, b);
            for (int c = 0; c < alg.dim; ++c) {
                SVec bc = alg.bracket(b, c);
                SVec ac = alg.bracket(a, c);
                if (ab.empty() && bc.empty() && ac.empty()) continue;
                SVec lhs = alg.bracket(sv_unit(a), bc);
                SVec rhs = alg.bracket(ab, sv_unit(c));
                SVec mid = alg.bracket(sv_unit(b), ac);
                if (alg.odd[a] && alg.odd[b]) mid = sv_scale(mid, RadicalScalar(-1));
                /* rhs now holds [[a,b],c] + (-1)^{p_a p_b}[b,[a,c]] */
                rhs = sv_add(rhs, mid);
                if (!sv_sub(lhs, rhs).empty())
                    throw ConstructionFailure("super Jacobi fails on basis triple (" +
                                              std::to_string(a) + "," + std::to_string(b) + "," +
                                              std::to_string(c) + ")");
            }
        }
}

void check_form_properties(const SuperLieAlgebra& alg) {
    /* even supersymmetric: zero across parities, symmetric on even pairs,
       antisymmetric on odd pairs */
    for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j) {
            const RadicalScalar& f = alg.form.at(i, j);
            if (alg.odd[i] != alg.odd[j] && !f.is_zero())
                throw ConstructionFailure("form pairs opposite parities");
            RadicalScalar g = alg.form.at(j, i);
            if (alg.odd[i] && alg.odd[j]) g = -g;
            if (f != g) throw ConstructionFailure("form is not supersymmetric");
        }
    if (rank(alg.form) != (size_t)alg.dim) throw ConstructionFailure("form is degenerate");
    /* invariance ([a,b]|c) = (a|[b,c]) on all basis triples */
    for (int a = 0; a < alg.dim; ++a)
        for (int b = 0; b < alg.dim; ++b) {
            SVec ab = alg.bracket(a, b);
            for (int c = 0; c < alg.dim; ++c) {
                SVec bc = alg.bracket(b, c);
                if (ab.empty() && bc.empty()) continue;
                RadicalScalar lhs = alg.form_pair(ab, sv_unit(c));
                RadicalScalar rhs = alg.form_pair(sv_unit(a), bc);
                if (lhs != rhs)
                    throw ConstructionFailure("form invariance fails on basis triple (" +
                                              std::to_string(a) + "," + std::to_string(b) + "," +
                                              std::to_string(c) + ")");
            }
        }
}

void check_weight_structure(const SuperLieAlgebra& alg) {
    const RootDatum& d = alg.datum;
    /* parities follow the root list */
    for (int i = 0; i < alg.dim; ++i) {
        bool expect = alg.root_of[i] >= 0 && d.all_roots[alg.root_of[i]].odd;
        if (alg.odd[i] != expect) throw ConstructionFailure("basis parity mismatch");
    }
    /* Cartan is abelian and acts by the root pairing */
    for (int s = 0; s < alg.n_cartan; ++s) {
        for (int t = s; t < alg.n_cartan; ++t)
            if (!alg.bracket_basis(s, t).empty())
                throw ConstructionFailure("Cartan slots fail to commute");
        for (size_t r = 0; r < d.all_roots.size(); ++r) {
            int v = alg.root_vec((int)r);
            SVec got = alg.bracket(s, v);
            SVec want = sv_unit(v, RadicalScalar(d.form(d.simple_roots[s].v, d.all_roots[r].v)));
            if (!sv_sub(got, want).empty())
                throw ConstructionFailure("Cartan action disagrees with the root pairing");
        }
    }
    /* [X_a, X_{-a}] is the coroot of a; other brackets stay in the
       weight-correct line */
    for (size_t r = 0; r < d.all_roots.size(); ++r)
        for (size_t q = 0; q < d.all_roots.size(); ++q) {
            int vr = alg.root_vec((int)r);
            int vq = alg.root_vec((int)q);
            SVec got = alg.bracket(vr, vq);
            Vec sum(d.coordinate_dim, Rational(0));
            for (int t = 0; t < d.coordinate_dim; ++t)
                sum[t] = d.all_roots[r].v[t] + d.all_roots[q].v[t];
            bool zero_weight = true;
            for (const auto& c : sum)
                if (!c.is_zero()) zero_weight = false;
            if (zero_weight) {
                SVec want = alg.coroot(d.all_roots[r].v);
                RadicalScalar pairing = alg.form.at(vr, vq);
                if (!sv_sub(got, sv_scale(want, pairing)).empty())
                    throw ConstructionFailure("[X_a, X_{-a}] disagrees with the coroot");
                continue;
            }
            int target = d.root_index(sum);
            for (const auto& [k, c] : got) {
                (void)c;
                if (target < 0 || k != alg.root_vec(target))
                    throw ConstructionFailure("bracket leaves its weight space");
            }
        }
}

Rational casimir_scalar(const SuperLieAlgebra& alg) {
    Mat<RadicalScalar> ginv = inverse(alg.form);
    std::vector<SVec> dual(alg.dim);
    for (int i = 0; i < alg.dim; ++i) {
        SVec v;
        for (int k = 0; k < alg.dim; ++k)
            if (!ginv.at(i, k).is_zero()) v.emplace_back(k, ginv.at(i, k));
        dual[i] = std::move(v);
    }
    RadicalScalar scalar(0);
    bool have_scalar = false;
    for (int j = 0; j < alg.dim; ++j) {
        SVec acc;
        for (int i = 0; i < alg.dim; ++i) {
            SVec inner = alg.bracket(dual[i], sv_unit(j));
            if (inner.empty()) continue;
            acc = sv_add(acc, alg.bracket(sv_unit(i), inner));
        }
        if (!have_scalar) {
            if (acc.empty()) {
                scalar = RadicalScalar(0);
            } else if (acc.size() == 1 && acc[0].first == j) {
                scalar = acc[0].second;
            } else {
                throw ConsistencyFailure("Casimir fails to act as a scalar");
            }
            have_scalar = true;
            continue;
        }
        if (!sv_sub(acc, sv_unit(j, scalar)).empty())
            throw ConsistencyFailure("Casimir eigenvalue varies across the basis");
    }
    if (!scalar.is_zero() && !scalar.is_rational())
        throw ConsistencyFailure("Casimir eigenvalue is not rational");
    return scalar.is_zero() ? Rational(0) : scalar.rational_value();
}

RadicalScalar structure_constant(const SuperLieAlgebra& alg, const Vec& a, const Vec& b) {
    const RootDatum& d = alg.datum;
    int ia = d.root_index(a);
    int ib = d.root_index(b);
    if (ia < 0 || ib < 0) throw NotARoot("structure constant of a non-root");
    Vec sum(d.coordinate_dim, Rational(0));
    for (int t = 0; t < d.coordinate_dim; ++t) sum[t] = a[t] + b[t];
    int is = d.root_index(sum);
    if (is < 0) throw NotARoot("root sum leaves the root system");
    SVec br = alg.bracket(alg.root_vec(ia), alg.root_vec(ib));
    int target = alg.root_vec(is);
    for (const auto& [k, c] : br)
        if (k == target) return c;
    return RadicalScalar(0);
}

}  // namespace wmin

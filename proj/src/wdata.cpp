#include "wmin/wdata.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "wmin/errors.hpp"
#include "wmin/halfform.hpp"
#include "wmin/linalg.hpp"

namespace wmin {

namespace {

Mat<RadicalScalar> span_gram_inverse(const SuperLieAlgebra& alg, const std::vector<SVec>& span) {
    int n = static_cast<int>(span.size());
    Mat<RadicalScalar> g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = alg.form_pair(span[i], span[j]);
    return inverse(g);
}

/* Exact coordinates of v over the span through the form pairing; the
   rebuild check detects vectors outside the span. */
bool coords_in_span(const SuperLieAlgebra& alg, const std::vector<SVec>& span,
                    const Mat<RadicalScalar>& gram_inv, const SVec& v,
                    std::vector<RadicalScalar>& out) {
    size_t n = span.size();
    std::vector<RadicalScalar> b(n, RadicalScalar(Rational(0)));
    for (size_t i = 0; i < n; ++i) b[i] = alg.form_pair(span[i], v);
    out.assign(n, RadicalScalar(Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i] = out[i] + gram_inv.at(i, j) * b[j];
    SVec rebuilt;
    for (size_t j = 0; j < n; ++j) rebuilt = sv_add(rebuilt, sv_scale(span[j], out[j]));
    return sv_sub(rebuilt, v).empty();
}

std::string component_label(const AlgebraSpec& spec, size_t comp_index, bool is_center) {
    std::ostringstream os;
    switch (spec.family) {
        case Family::SL2m:
            if (is_center) return "C varpi";
            os << "sl_" << spec.m;
            return os.str();
        case Family::PSL22:
            return "sl_2";
        case Family::SPO2m:
            if (spec.m <= 4) return "sl_2";
            os << "so_" << spec.m;
            return os.str();
        case Family::OSP4m:
            if (comp_index == 0) return "sl_2";
            os << "sp_" << spec.m;
            return os.str();
        case Family::D21a:
            return "sl_2";
        case Family::F4:
            return "so_7";
        case Family::G3:
            return "G_2";
    }
    throw InternalError("component label for unhandled family");
}

/* d = 0 cancels the pole exactly, so the division is skipped then */
Rational charge_value(const Rational& d, const Rational& h_dual, const Rational& k) {
    Rational c = Rational(-6) * k + h_dual - Rational(4);
    if (!d.is_zero()) c += k * d / (k + h_dual);
    return c;
}

}  // namespace

WData w_data(const AlgebraSpec& spec) {
    WData wd;
    wd.spec = spec;
    wd.data = almost_compact(build_algebra(spec));
    const SuperLieAlgebra& alg = wd.data.basis.alg;
    wd.grading = minimal_grading(alg, wd.data.triple);
    wd.comps = component_split(alg, wd.grading);

    bool has_simple = false;
    for (const Component& comp : wd.comps) has_simple = has_simple || !comp.is_center;
    if (!has_simple)
        throw AbelianGNatural("centralizer of the minimal triple is abelian for " + spec.name());

    wd.h_dual = dual_coxeter(alg.datum);
    wd.sdim = superdimension(alg.datum);

    for (size_t ci = 0; ci < wd.comps.size(); ++ci) {
        const Component& comp = wd.comps[ci];
        ComponentLevels lv;
        lv.is_center = comp.is_center;
        lv.label = component_label(spec, ci, comp.is_center);
        lv.dim = comp.dim;
        lv.rank = comp.rank;
        if (comp.is_center) {
            lv.u = Rational(2);
            lv.hbar = Rational(0);
        } else {
            lv.u = comp.u;
            /* half-sum of the positive cluster roots */
            Vec rho(static_cast<size_t>(alg.datum.coordinate_dim), Rational(0));
            for (int ri : comp.roots) {
                const Root& r = alg.datum.all_roots[static_cast<size_t>(ri)];
                if (!alg.datum.is_positive(r.v)) continue;
                for (size_t c = 0; c < rho.size(); ++c) rho[c] += r.v[c] * Rational(1, 2);
            }
            Rational h_std =
                Rational(1) + Rational(2) / lv.u * alg.datum.form(rho, comp.theta_i);
            lv.hbar = lv.u * h_std / Rational(2);

            /* independent check: the component Casimir built from dual
               bases of the restricted form must act as twice hbar */
            std::vector<SVec> span = comp.cartan;
            for (int ri : comp.roots) span.push_back(sv_unit(alg.root_vec(ri)));
            Mat<RadicalScalar> ginv = span_gram_inverse(alg, span);
            size_t n = span.size();
            std::vector<SVec> dual(n);
            for (size_t j = 0; j < n; ++j) {
                SVec dj;
                for (size_t s = 0; s < n; ++s) dj = sv_add(dj, sv_scale(span[s], ginv.at(s, j)));
                dual[j] = std::move(dj);
            }
            RadicalScalar twice(lv.hbar * Rational(2));
            for (size_t vx = 0; vx < n; ++vx) {
                SVec acc;
                for (size_t j = 0; j < n; ++j)
                    acc = sv_add(acc, alg.bracket(span[j], alg.bracket(dual[j], span[vx])));
                if (!sv_sub(acc, sv_scale(span[vx], twice)).empty())
                    throw ConsistencyFailure(
                        "component Casimir eigenvalue disagrees with u h_std for " + spec.name());
            }
        }
        lv.chi = (wd.h_dual - lv.hbar) / lv.u;
        lv.z = LevelPolynomial::linear(Rational(2) / lv.u, lv.chi);
        wd.levels.push_back(std::move(lv));
    }

    if (wd.levels.size() == 2) {
        wd.p = (wd.levels[0].z * wd.levels[1].z).monic();
    } else if (wd.levels.size() == 1) {
        LevelPolynomial shift =
            LevelPolynomial::linear(Rational(1), wd.levels[0].hbar / Rational(2) + Rational(1));
        wd.p = (wd.levels[0].z * shift).monic();
    } else {
        throw InternalError("unexpected component count for " + spec.name());
    }

    wd.comp_offset.push_back(0);
    for (const Component& comp : wd.comps) {
        for (const SVec& h : comp.cartan) wd.gn_span.push_back(h);
        for (int ri : comp.roots) wd.gn_span.push_back(sv_unit(alg.root_vec(ri)));
        wd.comp_offset.push_back(wd.gn_span.size());
    }
    wd.gn_gram_inv = span_gram_inverse(alg, wd.gn_span);
    wd.g0_span.push_back(wd.data.triple.x);
    for (const SVec& v : wd.gn_span) wd.g0_span.push_back(v);
    wd.g0_gram_inv = span_gram_inverse(alg, wd.g0_span);
    wd.g0_killing = killing_matrix(alg, wd.g0_span);
    return wd;
}

RadicalScalar beta_form(const WData& wd, const Rational& k, const SVec& a, const SVec& b) {
    const SuperLieAlgebra& alg = wd.data.basis.alg;
    std::vector<RadicalScalar> ca, cb;
    if (!coords_in_span(alg, wd.gn_span, wd.gn_gram_inv, a, ca) ||
        !coords_in_span(alg, wd.gn_span, wd.gn_gram_inv, b, cb))
        throw WrongSubspace("beta form arguments must lie in the centralizer");
    RadicalScalar total(Rational(0));
    for (size_t ci = 0; ci < wd.comps.size(); ++ci) {
        SVec ai, bi;
        for (size_t j = wd.comp_offset[ci]; j < wd.comp_offset[ci + 1]; ++j) {
            ai = sv_add(ai, sv_scale(wd.gn_span[j], ca[j]));
            bi = sv_add(bi, sv_scale(wd.gn_span[j], cb[j]));
        }
        Rational factor = k + (wd.h_dual - wd.levels[ci].hbar) / Rational(2);
        total = total + RadicalScalar(factor) * alg.form_pair(ai, bi);
    }
    return total;
}

RadicalScalar alpha_form(const WData& wd, const Rational& k, const SVec& a, const SVec& b) {
    const SuperLieAlgebra& alg = wd.data.basis.alg;
    std::vector<RadicalScalar> ca, cb;
    if (!coords_in_span(alg, wd.g0_span, wd.g0_gram_inv, a, ca) ||
        !coords_in_span(alg, wd.g0_span, wd.g0_gram_inv, b, cb))
        throw WrongSubspace("alpha form arguments must lie in the zero eigenspace");
    RadicalScalar kappa(Rational(0));
    for (size_t i = 0; i < ca.size(); ++i)
        for (size_t j = 0; j < cb.size(); ++j) kappa = kappa + ca[i] * cb[j] * wd.g0_killing.at(i, j);
    return RadicalScalar(k + wd.h_dual) * alg.form_pair(a, b) -
           RadicalScalar(Rational(1, 2)) * kappa;
}

RadicalScalar natural_form(const WData& wd, int comp_index, const SVec& a, const SVec& b) {
    if (comp_index < 0 || comp_index >= static_cast<int>(wd.comps.size()))
        throw WrongSubspace("no component with that index");
    const SuperLieAlgebra& alg = wd.data.basis.alg;
    std::vector<RadicalScalar> ca, cb;
    if (!coords_in_span(alg, wd.gn_span, wd.gn_gram_inv, a, ca) ||
        !coords_in_span(alg, wd.gn_span, wd.gn_gram_inv, b, cb))
        throw WrongSubspace("normalized form arguments must lie in the centralizer");
    size_t lo = wd.comp_offset[static_cast<size_t>(comp_index)];
    size_t hi = wd.comp_offset[static_cast<size_t>(comp_index) + 1];
    for (size_t j = 0; j < ca.size(); ++j) {
        if (j >= lo && j < hi) continue;
        if (!ca[j].is_zero() || !cb[j].is_zero())
            throw WrongSubspace("normalized form arguments must lie in the named component");
    }
    RadicalScalar value = alg.form_pair(a, b);
    if (!wd.levels[static_cast<size_t>(comp_index)].is_center)
        value = value * RadicalScalar(wd.levels[static_cast<size_t>(comp_index)].u / Rational(2));
    return value;
}

LevelPolynomial collapsing_poly(const WData& wd) { return wd.p; }

LevelRationalFunction central_charge(const AlgebraSpec& spec) {
    RootDatum datum = root_system(spec);
    Rational h = dual_coxeter(datum);
    Rational d(superdimension(datum));
    LevelPolynomial den = LevelPolynomial::linear(Rational(1), h);
    LevelPolynomial num = LevelPolynomial::variable().scaled(d) +
                          LevelPolynomial::linear(Rational(-6), h - Rational(4)) * den;
    return LevelRationalFunction(num, den);
}

Rational central_charge_at(const AlgebraSpec& spec, const Rational& k) {
    RootDatum datum = root_system(spec);
    Rational h = dual_coxeter(datum);
    if (k == -h)
        throw PoleAtLevel("central charge has a pole at k = " + k.to_string() + " for " +
                          spec.name());
    return charge_value(Rational(superdimension(datum)), h, k);
}

void check_charge_rewriting(const AlgebraSpec& spec) {
    RootDatum datum = root_system(spec);
    Rational h = dual_coxeter(datum);
    Rational d(superdimension(datum));
    Rational s = d * h / Rational(6);
    using LRF = LevelRationalFunction;
    LevelPolynomial one = LevelPolynomial::constant(Rational(1));
    auto constant = [&one](const Rational& c) { return LRF(LevelPolynomial::constant(c), one); };
    LRF kplus(LevelPolynomial::linear(Rational(1), h), one);

    /* write the rewriting as (rational part) + (coefficient) * r with
       r^2 = s; the square term expands to (k+h)^2 + s - 2 r (k+h) */
    LRF rational_part =
        constant(Rational(7) * h + d - Rational(4)) -
        constant(Rational(6)) * (kplus * kplus + constant(s)) / kplus;
    LRF radical_coeff = constant(Rational(-12)) + constant(Rational(12)) * kplus / kplus;

    if (!radical_coeff.is_zero())
        throw ConsistencyFailure("charge rewriting keeps a radical term for " + spec.name() +
                                 ": " + radical_coeff.to_string());
    LRF residual_sq = radical_coeff * radical_coeff * constant(s);
    if (!residual_sq.is_zero())
        throw ConsistencyFailure("squared radical residual is nonzero for " + spec.name());
    if (!(rational_part == central_charge(spec)))
        throw ConsistencyFailure("charge rewriting rational part differs from the charge for " +
                                 spec.name() + ": " + rational_part.to_string());
}

Rational partner_product(const AlgebraSpec& spec) {
    RootDatum datum = root_system(spec);
    return Rational(superdimension(datum)) * dual_coxeter(datum) / Rational(6);
}

Rational partner_level(const AlgebraSpec& spec, const Rational& k) {
    RootDatum datum = root_system(spec);
    Rational h = dual_coxeter(datum);
    if (k == -h)
        throw PoleAtLevel("no partner at the excluded level k = " + k.to_string());
    Rational prod = Rational(superdimension(datum)) * h / Rational(6);
    if (prod.is_zero())
        throw ZeroProduct("d h_dual = 0 for " + spec.name() +
                          "; the charge is affine and partnering is undefined");
    Rational partner = -h + prod / (k + h);
    if (partner == k) throw SelfPartner("k = " + k.to_string() + " is its own partner");
    return partner;
}

const char* verdict_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::ExcludedLevel: return "ExcludedLevel";
        case VerdictKind::Trivial: return "Trivial";
        case VerdictKind::CollapsingUnitary: return "CollapsingUnitary";
        case VerdictKind::CollapsingNonUnitary: return "CollapsingNonUnitary";
        case VerdictKind::UnitaryNontrivial: return "UnitaryNontrivial";
        case VerdictKind::NonUnitary: return "NonUnitary";
    }
    throw InternalError("unhandled verdict kind");
}

UnitarityVerdict classify_level(const WData& wd, const Rational& k) {
    UnitarityVerdict v;
    for (const ComponentLevels& lv : wd.levels) v.z_values.push_back(lv.z.evaluate(k));
    Rational d(wd.sdim);

    /* The trivial point may coincide with the excluded level (it does for
       spo(2|3)); the charge stays finite there because d = 0 cancels the
       pole, so the trivial test runs first. */
    bool simple = wd.levels.size() == 1 && !wd.levels[0].is_center;
    if (simple && v.z_values[0].is_zero()) {
        v.kind = VerdictKind::Trivial;
        if (k != -wd.h_dual || d.is_zero()) {
            v.has_charge = true;
            v.c = charge_value(d, wd.h_dual, k);
        }
        return v;
    }
    if (k == -wd.h_dual) {
        v.kind = VerdictKind::ExcludedLevel;
        return v;
    }
    v.has_charge = true;
    v.c = charge_value(d, wd.h_dual, k);
    if (wd.p.evaluate(k).is_zero()) {
        /* collapse onto the affine vertex algebra of the components that
           keep a nonzero level; the center contributes a Heisenberg
           factor and is exempt from the integrality requirement */
        bool unitary = true;
        std::ostringstream target;
        bool empty = true;
        for (size_t i = 0; i < wd.levels.size(); ++i) {
            if (v.z_values[i].is_zero()) continue;
            if (!empty) target << " (x) ";
            empty = false;
            if (wd.levels[i].is_center) {
                target << "M(" << wd.levels[i].label << ")";
            } else {
                target << "V_{" << v.z_values[i].to_string() << "}(" << wd.levels[i].label << ")";
                if (!v.z_values[i].is_positive_integer()) unitary = false;
            }
        }
        if (empty) target << "C";
        v.target = target.str();
        v.kind = unitary ? VerdictKind::CollapsingUnitary : VerdictKind::CollapsingNonUnitary;
        return v;
    }
    bool semisimple = true;
    for (const ComponentLevels& lv : wd.levels) semisimple = semisimple && !lv.is_center;
    bool integral = true;
    for (size_t i = 0; i < wd.levels.size(); ++i)
        if (!wd.levels[i].is_center && !v.z_values[i].is_nonnegative_integer()) integral = false;
    v.kind = (semisimple && integral) ? VerdictKind::UnitaryNontrivial : VerdictKind::NonUnitary;
    return v;
}

bool nontrivial_unitary(const UnitarityVerdict& verdict) {
    if (verdict.kind == VerdictKind::UnitaryNontrivial) return true;
    return verdict.kind == VerdictKind::CollapsingUnitary && verdict.target != "C";
}

std::vector<std::pair<Rational, Rational>> unitary_levels(const WData& wd, int count) {
    if (count < 0) throw BadParameter("count must be nonnegative");
    std::vector<Rational> ks;
    switch (wd.spec.family) {
        case Family::SL2m:
            if (count > 0) ks.push_back(Rational(-1));
            break;
        case Family::PSL22:
            for (long n = 1; static_cast<int>(ks.size()) < count; ++n)
                ks.push_back(Rational(-(n + 1)));
            break;
        case Family::SPO2m:
            if (wd.spec.m == 3) {
                for (long n = 1; static_cast<int>(ks.size()) < count; ++n)
                    ks.push_back(Rational(-(n + 2), 4));
            } else {
                for (long n = 1; static_cast<int>(ks.size()) < count; ++n)
                    ks.push_back(Rational(-(n + 1), 2));
            }
            break;
        case Family::OSP4m:
            throw EmptySet("osp(4|m) has no nontrivial unitary levels");
        case Family::D21a: {
            const Rational& a = wd.spec.a;
            if (!(a.sign() < 0 && a > Rational(-1)))
                throw EmptySet("D(2,1;a) has nontrivial unitary levels only for a in (-1,0)");
            /* a = -p/q in lowest terms: the levels are -p(q-p)t/q */
            Rational q = Rational::from_mpz(a.denominator(), mpz_class(1));
            Rational step = -a * (Rational(1) + a) * q;
            long t = (a.denominator() == 2) ? 2 : 1;
            for (; static_cast<int>(ks.size()) < count; ++t) ks.push_back(-(step * Rational(t)));
            break;
        }
        case Family::F4:
            for (long n = 1; static_cast<int>(ks.size()) < count; ++n)
                ks.push_back(Rational(-2 * (n + 1), 3));
            break;
        case Family::G3:
            for (long n = 1; static_cast<int>(ks.size()) < count; ++n)
                ks.push_back(Rational(-3 * (n + 1), 4));
            break;
    }
    std::vector<std::pair<Rational, Rational>> out;
    for (const Rational& k : ks) {
        UnitarityVerdict verdict = classify_level(wd, k);
        if (!nontrivial_unitary(verdict))
            throw InternalError("closed-form unitary level fails classification: k = " +
                                k.to_string() + " for " + wd.spec.name());
        out.emplace_back(k, verdict.c);
    }
    return out;
}

Rational classical_series(int n, long p) {
    if (p < 2) throw BadParameter("the series parameter must satisfy p >= 2");
    switch (n) {
        case 0:
            return Rational(1) - Rational(6) / Rational(p * (p + 1));
        case 1:
            return Rational(3, 2) * (Rational(1) - Rational(8) / Rational(p * (p + 2)));
        case 2:
            return Rational(3) * (Rational(1) - Rational(2) / Rational(p));
    }
    throw BadParameter("the series index must be 0, 1, or 2");
}

RadicalScalar g_self_bracket_constant(const WData& wd, const Rational& k, const SVec& u,
                                      const SVec& v) {
    const SuperLieAlgebra& alg = wd.data.basis.alg;
    RadicalScalar half(Rational(-1, 2));
    for (const SVec* arg : {&u, &v}) {
        SVec xe = alg.bracket(wd.data.triple.x, *arg);
        if (!sv_sub(xe, sv_scale(*arg, half)).empty())
            throw WrongSubspace("self bracket arguments must lie in the -1/2 eigenspace");
    }
    return RadicalScalar(Rational(4) * wd.p.evaluate(k)) *
           half_pair(alg, wd.data.triple, u, v);
}

void check_unitarity_bound(const WData& wd) {
    bool has_upper = false, has_lower = false;
    Rational upper, lower;
    for (const ComponentLevels& lv : wd.levels) {
        if (lv.is_center) continue;
        Rational slope = Rational(2) / lv.u;
        Rational root = -lv.chi / slope;
        if (slope.sign() < 0) {
            if (!has_upper || root < upper) upper = root;
            has_upper = true;
        } else {
            if (!has_lower || root > lower) lower = root;
            has_lower = true;
        }
    }
    if (!has_upper)
        throw ConsistencyFailure("no decreasing component level for " + wd.spec.name());
    if (has_lower && lower > upper) return; /* the nonnegativity set is empty */
    if (upper > -wd.h_dual)
        throw ConsistencyFailure(
            "nonnegative component levels do not force k + h_dual < 0 for " + wd.spec.name() +
            "; witness k = " + upper.to_string());
}

namespace {

struct PrintedComponent {
    bool is_center = false;
    int dim = 0;
    int rank = 0;
    Rational u;
    Rational hbar;
    Rational chi;
    Rational z_slope;
    Rational z_const;
};

struct PrintedRow {
    std::string family;
    Rational h_dual;
    std::vector<PrintedComponent> comps;
    bool has_collapsing = false;
    std::vector<Rational> collapsing;
    std::string collapsing_printed_text;
    std::string collapsing_computed_text;
};

PrintedRow printed_row(const AlgebraSpec& spec) {
    PrintedRow r;
    long m = spec.m;
    const Rational& a = spec.a;
    switch (spec.family) {
        case Family::SL2m:
            r.family = "sl(2|m)";
            r.h_dual = Rational(2 - m);
            r.comps.push_back({true, 1, 1, Rational(2), Rational(0), Rational(2 - m, 2),
                               Rational(1), Rational(2 - m, 2)});
            r.comps.push_back({false, static_cast<int>(m * m - 1), static_cast<int>(m - 1),
                               Rational(-2), Rational(-m), Rational(-1), Rational(-1),
                               Rational(-1)});
            r.has_collapsing = true;
            r.collapsing = {Rational(-1), Rational(-m - 2, 2)};
            r.collapsing_printed_text = "{-1, -m/2-1}";
            r.collapsing_computed_text = "{-1, m/2-1}";
            break;
        case Family::PSL22:
            r.family = "psl(2|2)";
            r.h_dual = Rational(0);
            r.comps.push_back({false, 3, 1, Rational(-2), Rational(-2), Rational(-1),
                               Rational(-1), Rational(-1)});
            break;
        case Family::SPO2m:
            if (m == 3) {
                r.family = "spo(2|3)";
                r.h_dual = Rational(1, 2);
                r.comps.push_back({false, 3, 1, Rational(-1, 2), Rational(-1, 2), Rational(-2),
                                   Rational(-4), Rational(-2)});
            } else {
                r.family = "spo(2|m)";
                r.h_dual = Rational(4 - m, 2);
                PrintedComponent c{false, static_cast<int>(m * (m - 1) / 2),
                                   static_cast<int>(m / 2), Rational(-1), Rational(2 - m, 2),
                                   Rational(-1), Rational(-2), Rational(-1)};
                if (m == 4) {
                    c.dim = 3;
                    c.rank = 1;
                    r.comps.push_back(c);
                    r.comps.push_back(c);
                } else {
                    r.comps.push_back(c);
                }
            }
            break;
        case Family::OSP4m:
            r.family = "osp(4|m)";
            r.h_dual = Rational(2 - m);
            r.comps.push_back({false, 3, 1, Rational(2), Rational(2), Rational(-m, 2),
                               Rational(1), Rational(-m, 2)});
            r.comps.push_back({false, static_cast<int>(m * (m + 1) / 2),
                               static_cast<int>(m / 2), Rational(-4), Rational(-m - 2),
                               Rational(-1), Rational(-1, 2), Rational(-1)});
            break;
        case Family::D21a: {
            r.family = "D(2,1;a)";
            r.h_dual = Rational(0);
            Rational u1 = Rational(-2) - Rational(2) * a;
            Rational u2 = Rational(2) * a;
            r.comps.push_back({false, 3, 1, u1, u1, Rational(-1),
                               -(Rational(1) + a).inverse(), Rational(-1)});
            r.comps.push_back({false, 3, 1, u2, u2, Rational(-1), a.inverse(), Rational(-1)});
            break;
        }
        case Family::F4:
            r.family = "F(4)";
            r.h_dual = Rational(-2);
            r.comps.push_back({false, 21, 3, Rational(-4, 3), Rational(-10, 3), Rational(-1),
                               Rational(-3, 2), Rational(-1)});
            break;
        case Family::G3:
            r.family = "G(3)";
            r.h_dual = Rational(-3, 2);
            r.comps.push_back({false, 14, 2, Rational(-2, 3), Rational(-3), Rational(-1),
                               Rational(-4, 3), Rational(-1)});
            break;
    }
    return r;
}

}  // namespace

std::vector<Table2Flag> table2_flags(const WData& wd) {
    PrintedRow row = printed_row(wd.spec);
    std::vector<Table2Flag> flags;
    auto mismatch = [&](const std::string& item, const std::string& printed,
                        const std::string& computed) {
        flags.push_back({row.family, item, printed, computed});
    };
    auto compare = [&](const std::string& item, const Rational& printed,
                       const Rational& computed) {
        if (printed != computed) mismatch(item, printed.to_string(), computed.to_string());
    };

    compare("h_dual", row.h_dual, wd.h_dual);
    if (row.comps.size() != wd.levels.size()) {
        mismatch("component count", std::to_string(row.comps.size()),
                 std::to_string(wd.levels.size()));
        return flags;
    }
    int simple_index = 0;
    for (size_t i = 0; i < row.comps.size(); ++i) {
        const PrintedComponent& pc = row.comps[i];
        const ComponentLevels& lv = wd.levels[i];
        std::string suffix = "_" + std::to_string(pc.is_center ? 0 : ++simple_index);
        if (pc.is_center != lv.is_center || pc.dim != lv.dim || pc.rank != lv.rank) {
            std::ostringstream printed, computed;
            printed << (pc.is_center ? "center " : "simple ") << pc.dim << "/" << pc.rank;
            computed << (lv.is_center ? "center " : "simple ") << lv.dim << "/" << lv.rank;
            mismatch("component shape" + suffix, printed.str(), computed.str());
        }
        compare("u" + suffix, pc.u, lv.u);
        compare("hbar" + suffix, pc.hbar, lv.hbar);
        compare("chi" + suffix, pc.chi, lv.chi);
        LevelPolynomial printed_z = LevelPolynomial::linear(pc.z_slope, pc.z_const);
        if (printed_z != lv.z)
            mismatch("z" + suffix, printed_z.to_string(), lv.z.to_string());
    }
    if (row.has_collapsing) {
        std::vector<Rational> printed = row.collapsing;
        std::vector<Rational> computed = rational_roots(wd.p);
        std::sort(printed.begin(), printed.end());
        std::sort(computed.begin(), computed.end());
        if (printed != computed)
            mismatch("collapsing levels", row.collapsing_printed_text,
                     row.collapsing_computed_text);
    }
    return flags;
}

}  // namespace wmin

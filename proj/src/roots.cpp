#include <algorithm>

#include "wmin/errors.hpp"
#include "wmin/roots.hpp"

namespace wmin {

namespace {

Vec unit(int dim, int i, const Rational& c = Rational(1)) {
    Vec v(dim, Rational(0));
    v[i] = c;
    return v;
}

Vec vsum(const Vec& a, const Vec& b) {
    Vec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
    return v;
}

Vec vneg(const Vec& a) {
    Vec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = -a[i];
    return v;
}

void push_pair(std::vector<Root>& out, const Vec& v, bool odd) {
    out.push_back({v, odd});
    out.push_back({vneg(v), odd});
}

/*
 * sl(2|m) and psl(2|2): coordinates (eps1, eps2, delta_1..delta_m),
 * (eps_i|eps_j) = delta_ij = -(delta_i|delta_j); simple system
 * eps1-delta_1, delta_1-delta_2, ..., delta_m-eps2; theta = eps1-eps2.
 */
void build_sl(RootDatum& d, int m) {
    int dim = m + 2;
    d.coordinate_dim = dim;
    d.gram = Mat<Rational>(dim, dim);
    for (int i = 0; i < dim; ++i) d.gram.at(i, i) = Rational(i < 2 ? 1 : -1);
    auto eps = [&](int i) { return unit(dim, i); };
    auto del = [&](int j) { return unit(dim, 2 + j); };

    d.simple_roots.push_back({vsum(eps(0), vneg(del(0))), true});
    for (int j = 0; j + 1 < m; ++j)
        d.simple_roots.push_back({vsum(del(j), vneg(del(j + 1))), false});
    d.simple_roots.push_back({vsum(del(m - 1), vneg(eps(1))), true});

    push_pair(d.all_roots, vsum(eps(0), vneg(eps(1))), false);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) push_pair(d.all_roots, vsum(del(i), vneg(del(j))), false);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < m; ++j) push_pair(d.all_roots, vsum(eps(i), vneg(del(j))), true);

    d.theta = vsum(eps(0), vneg(eps(1)));
}

/*
 * spo(2|m): coordinates (delta, eps_1..eps_n) with n = floor(m/2),
 * (delta|delta) = 1/2, (eps_i|eps_j) = -(1/2) delta_ij; theta = 2 delta.
 * The simple system depends on the parity and size of m.
 */
void build_spo(RootDatum& d, int m) {
    int n = m / 2;
    int dim = 1 + n;
    d.coordinate_dim = dim;
    d.gram = Mat<Rational>(dim, dim);
    d.gram.at(0, 0) = Rational(1, 2);
    for (int i = 1; i < dim; ++i) d.gram.at(i, i) = Rational(-1, 2);
    auto delta = [&](const Rational& c) { return unit(dim, 0, c); };
    auto eps = [&](int i) { return unit(dim, 1 + i); };

    if (m == 0) {
        d.simple_roots.push_back({delta(Rational(2)), false});
    } else if (m == 1) {
        d.simple_roots.push_back({delta(Rational(1)), true});
    } else if (m == 2) {
        d.simple_roots.push_back({vsum(delta(Rational(1)), vneg(eps(0))), true});
        d.simple_roots.push_back({vsum(delta(Rational(1)), eps(0)), true});
    } else {
        d.simple_roots.push_back({vsum(delta(Rational(1)), vneg(eps(0))), true});
        for (int i = 0; i + 1 < n; ++i)
            d.simple_roots.push_back({vsum(eps(i), vneg(eps(i + 1))), false});
        if (m % 2 == 1)
            d.simple_roots.push_back({eps(n - 1), false});
        else
            d.simple_roots.push_back({vsum(eps(n - 2), eps(n - 1)), false});
    }

    push_pair(d.all_roots, delta(Rational(2)), false);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            push_pair(d.all_roots, vsum(eps(i), vneg(eps(j))), false);
            push_pair(d.all_roots, vsum(eps(i), eps(j)), false);
        }
    if (m % 2 == 1)
        for (int i = 0; i < n; ++i) push_pair(d.all_roots, eps(i), false);
    for (int i = 0; i < n; ++i) {
        push_pair(d.all_roots, vsum(delta(Rational(1)), vneg(eps(i))), true);
        push_pair(d.all_roots, vsum(delta(Rational(1)), eps(i)), true);
    }
    if (m % 2 == 1) push_pair(d.all_roots, delta(Rational(1)), true);

    d.theta = delta(Rational(2));
}

/*
 * osp(4|m), m = 2r: coordinates (eps1, eps2, delta_1..delta_r),
 * (eps_i|eps_j) = delta_ij = -(delta_i|delta_j); simple system
 * eps1-eps2, eps2-delta_1, delta chain, 2 delta_r; theta = eps1+eps2.
 */
void build_osp(RootDatum& d, int m) {
    int r = m / 2;
    int dim = 2 + r;
    d.coordinate_dim = dim;
    d.gram = Mat<Rational>(dim, dim);
    for (int i = 0; i < dim; ++i) d.gram.at(i, i) = Rational(i < 2 ? 1 : -1);
    auto eps = [&](int i) { return unit(dim, i); };
    auto del = [&](int j, const Rational& c = Rational(1)) { return unit(dim, 2 + j, c); };

    d.simple_roots.push_back({vsum(eps(0), vneg(eps(1))), false});
    d.simple_roots.push_back({vsum(eps(1), vneg(del(0))), true});
    for (int j = 0; j + 1 < r; ++j)
        d.simple_roots.push_back({vsum(del(j), vneg(del(j + 1))), false});
    d.simple_roots.push_back({del(r - 1, Rational(2)), false});

    push_pair(d.all_roots, vsum(eps(0), vneg(eps(1))), false);
    push_pair(d.all_roots, vsum(eps(0), eps(1)), false);
    for (int i = 0; i < r; ++i) {
        push_pair(d.all_roots, del(i, Rational(2)), false);
        for (int j = i + 1; j < r; ++j) {
            push_pair(d.all_roots, vsum(del(i), vneg(del(j))), false);
            push_pair(d.all_roots, vsum(del(i), del(j)), false);
        }
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < r; ++j) {
            push_pair(d.all_roots, vsum(eps(i), vneg(del(j))), true);
            push_pair(d.all_roots, vsum(eps(i), del(j)), true);
        }

    d.theta = vsum(eps(0), eps(1));
}

/*
 * D(2,1;a): coordinates (eps1, eps2, delta); the form is pinned by
 * (theta|theta) = 2 together with the even-root norms 2a, 2, -2-2a and
 * isotropy of the odd roots:
 *   (eps_i|eps_i) = (1+a)/2, (eps1|eps2) = (1-a)/2,
 *   (delta|delta) = -(1+a)/2, (eps_i|delta) = 0.
 * Simple system eps1-eps2, eps2-delta, 2 delta; theta = eps1+eps2.
 */
void build_d21(RootDatum& d, const Rational& a) {
    d.coordinate_dim = 3;
    d.gram = Mat<Rational>(3, 3);
    Rational half_p = (Rational(1) + a) / Rational(2);
    Rational half_m = (Rational(1) - a) / Rational(2);
    d.gram.at(0, 0) = half_p;
    d.gram.at(1, 1) = half_p;
    d.gram.at(0, 1) = half_m;
    d.gram.at(1, 0) = half_m;
    d.gram.at(2, 2) = -half_p;
    auto eps = [&](int i) { return unit(3, i); };
    auto delta = [&](const Rational& c) { return unit(3, 2, c); };

    d.simple_roots.push_back({vsum(eps(0), vneg(eps(1))), false});
    d.simple_roots.push_back({vsum(eps(1), vneg(delta(Rational(1)))), true});
    d.simple_roots.push_back({delta(Rational(2)), false});

    push_pair(d.all_roots, vsum(eps(0), vneg(eps(1))), false);
    push_pair(d.all_roots, vsum(eps(0), eps(1)), false);
    push_pair(d.all_roots, delta(Rational(2)), false);
    for (int i = 0; i < 2; ++i) {
        push_pair(d.all_roots, vsum(eps(i), vneg(delta(Rational(1)))), true);
        push_pair(d.all_roots, vsum(eps(i), delta(Rational(1))), true);
    }

    d.theta = vsum(eps(0), eps(1));
}

/*
 * F(4): coordinates (delta, eps1, eps2, eps3), (delta|delta) = 2,
 * (eps_i|eps_j) = -(2/3) delta_ij; simple system
 * (delta-eps1-eps2-eps3)/2, eps3, eps2-eps3, eps1-eps2; theta = delta.
 */
void build_f4(RootDatum& d) {
    d.coordinate_dim = 4;
    d.gram = Mat<Rational>(4, 4);
    d.gram.at(0, 0) = Rational(2);
    for (int i = 1; i < 4; ++i) d.gram.at(i, i) = Rational(-2, 3);
    auto delta = [&](const Rational& c) { return unit(4, 0, c); };
    auto eps = [&](int i, const Rational& c = Rational(1)) { return unit(4, 1 + i, c); };

    Vec alpha1(4, Rational(0));
    alpha1[0] = Rational(1, 2);
    alpha1[1] = Rational(-1, 2);
    alpha1[2] = Rational(-1, 2);
    alpha1[3] = Rational(-1, 2);
    d.simple_roots.push_back({alpha1, true});
    d.simple_roots.push_back({eps(2), false});
    d.simple_roots.push_back({vsum(eps(1), vneg(eps(2))), false});
    d.simple_roots.push_back({vsum(eps(0), vneg(eps(1))), false});

    push_pair(d.all_roots, delta(Rational(1)), false);
    for (int i = 0; i < 3; ++i) {
        push_pair(d.all_roots, eps(i), false);
        for (int j = i + 1; j < 3; ++j) {
            push_pair(d.all_roots, vsum(eps(i), vneg(eps(j))), false);
            push_pair(d.all_roots, vsum(eps(i), eps(j)), false);
        }
    }
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1}) {
                Vec v(4, Rational(0));
                v[0] = Rational(1, 2);
                v[1] = Rational(s1, 2);
                v[2] = Rational(s2, 2);
                v[3] = Rational(s3, 2);
                push_pair(d.all_roots, v, true);
            }

    d.theta = delta(Rational(1));
}

/*
 * G(3): the catalog lists three eps coordinates with eps1+eps2+eps3 = 0;
 * we eliminate eps3 = -eps1-eps2 and keep coordinates (delta, eps1, eps2).
 * Restricting (eps_i|eps_j) = 1/4 - (3/4) delta_ij gives
 * (eps_i|eps_i) = -1/2, (eps1|eps2) = 1/4, with (delta|delta) = 1/2.
 * Simple system delta-eps1-eps2, eps1, eps2-eps1; theta = 2 delta.
 */
void build_g3(RootDatum& d) {
    d.coordinate_dim = 3;
    d.gram = Mat<Rational>(3, 3);
    d.gram.at(0, 0) = Rational(1, 2);
    d.gram.at(1, 1) = Rational(-1, 2);
    d.gram.at(2, 2) = Rational(-1, 2);
    d.gram.at(1, 2) = Rational(1, 4);
    d.gram.at(2, 1) = Rational(1, 4);
    auto delta = [&](const Rational& c) { return unit(3, 0, c); };
    auto e12 = [&](long c1, long c2) {
        Vec v(3, Rational(0));
        v[1] = Rational(c1);
        v[2] = Rational(c2);
        return v;
    };

    Vec alpha1(3, Rational(0));
    alpha1[0] = Rational(1);
    alpha1[1] = Rational(-1);
    alpha1[2] = Rational(-1);
    d.simple_roots.push_back({alpha1, true});
    d.simple_roots.push_back({e12(1, 0), false});
    d.simple_roots.push_back({e12(-1, 1), false});

    push_pair(d.all_roots, delta(Rational(2)), false);
    for (auto [c1, c2] : {std::pair<long, long>{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}})
        push_pair(d.all_roots, e12(c1, c2), false);
    push_pair(d.all_roots, delta(Rational(1)), true);
    for (auto [c1, c2] : {std::pair<long, long>{1, 0}, {0, 1}, {1, 1}})
        for (int s : {1, -1}) {
            Vec v = e12(s * c1, s * c2);
            v[0] = Rational(1);
            push_pair(d.all_roots, v, true);
        }

    d.theta = delta(Rational(2));
}

Rational closed_form_dual_coxeter(const AlgebraSpec& s) {
    switch (s.family) {
        case Family::SL2m:
            return Rational(2 - s.m);
        case Family::PSL22:
            return Rational(0);
        case Family::SPO2m:
            return Rational(2) - Rational(s.m, 2);
        case Family::OSP4m:
            return Rational(2 - s.m);
        case Family::D21a:
            return Rational(0);
        case Family::F4:
            return Rational(-2);
        case Family::G3:
            return Rational(-3, 2);
    }
    throw InternalError("unreachable family");
}

}  // namespace

Rational RootDatum::form(const Vec& x, const Vec& y) const {
    Rational out(0);
    for (int i = 0; i < coordinate_dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < coordinate_dim; ++j) {
            if (y[j].is_zero()) continue;
            out += x[i] * gram.at(i, j) * y[j];
        }
    }
    return out;
}

std::vector<Rational> RootDatum::simple_coords(const Vec& r) const {
    int rank = (int)simple_roots.size();
    std::vector<Rational> c(rank, Rational(0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < coordinate_dim; ++j) c[i] += simple_solver.at(i, j) * r[j];
    /* confirm membership in the simple-root span */
    for (int j = 0; j < coordinate_dim; ++j) {
        Rational back(0);
        for (int i = 0; i < rank; ++i) back += c[i] * simple_roots[i].v[j];
        if (back != r[j]) throw InternalError("vector outside the root lattice span");
    }
    return c;
}

Rational RootDatum::height(const Vec& r) const {
    Rational h(0);
    for (const auto& c : simple_coords(r)) h += c;
    return h;
}

bool RootDatum::is_positive(const Vec& r) const {
    for (const auto& c : simple_coords(r)) {
        if (c.sign() > 0) return true;
        if (c.sign() < 0) return false;
    }
    return false;
}

int RootDatum::root_index(const Vec& r) const {
    for (size_t i = 0; i < all_roots.size(); ++i)
        if (all_roots[i].v == r) return (int)i;
    return -1;
}

int RootDatum::positive_index(const Vec& r) const {
    for (size_t i = 0; i < positive_roots.size(); ++i)
        if (positive_roots[i].v == r) return (int)i;
    return -1;
}

RootDatum root_system(const AlgebraSpec& spec) {
    RootDatum d;
    d.spec = spec;
    switch (spec.family) {
        case Family::SL2m:
            build_sl(d, spec.m);
            break;
        case Family::PSL22:
            build_sl(d, 2);
            break;
        case Family::SPO2m:
            build_spo(d, spec.m);
            break;
        case Family::OSP4m:
            build_osp(d, spec.m);
            break;
        case Family::D21a:
            build_d21(d, spec.a);
            break;
        case Family::F4:
            build_f4(d);
            break;
        case Family::G3:
            build_g3(d);
            break;
    }

    int rank = (int)d.simple_roots.size();
    d.cartan_dim = rank;
    d.algebra_cartan_dim = (spec.family == Family::PSL22) ? 2 : rank;

    /*
     * Left inverse of the simple-root column matrix A via (A^T A)^{-1} A^T;
     * the simple roots are linearly independent, so A^T A is invertible.
     */
    Mat<Rational> at(rank, d.coordinate_dim);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < d.coordinate_dim; ++j) at.at(i, j) = d.simple_roots[i].v[j];
    Mat<Rational> ata(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rational s(0);
            for (int k = 0; k < d.coordinate_dim; ++k) s += at.at(i, k) * at.at(j, k);
            ata.at(i, j) = s;
        }
    d.simple_solver = inverse(ata) * at;

    /* sort ascending by (height, simple-coefficient vector) */
    std::vector<std::pair<std::vector<Rational>, Root>> keyed;
    keyed.reserve(d.all_roots.size());
    for (const auto& r : d.all_roots) {
        auto c = d.simple_coords(r.v);
        std::vector<Rational> key;
        key.push_back(d.height(r.v));
        for (auto& x : c) key.push_back(x);
        keyed.push_back({key, r});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        const auto& ka = a.first;
        const auto& kb = b.first;
        for (size_t i = 0; i < ka.size(); ++i) {
            if (ka[i] < kb[i]) return true;
            if (kb[i] < ka[i]) return false;
        }
        return false;
    });
    d.all_roots.clear();
    for (auto& kv : keyed) d.all_roots.push_back(kv.second);
    for (const auto& r : d.all_roots)
        if (d.is_positive(r.v)) d.positive_roots.push_back(r);
    return d;
}

Rational dual_coxeter(const RootDatum& datum) {
    Vec rho2(datum.coordinate_dim, Rational(0));
    for (const auto& r : datum.positive_roots)
        for (int j = 0; j < datum.coordinate_dim; ++j)
            rho2[j] += r.odd ? -r.v[j] : r.v[j];
    Rational h = datum.form(datum.theta, datum.theta) / Rational(2) +
                 datum.form(rho2, datum.theta) / Rational(2);
    Rational expected = closed_form_dual_coxeter(datum.spec);
    if (h != expected)
        throw ConsistencyFailure("dual Coxeter mismatch for " + datum.spec.name() + ": got " +
                                 h.to_string() + ", expected " + expected.to_string());
    return h;
}

long superdimension(const RootDatum& datum) {
    long even = 0, odd = 0;
    for (const auto& r : datum.all_roots) (r.odd ? odd : even) += 1;
    return datum.algebra_cartan_dim + even - odd;
}

}  // namespace wmin

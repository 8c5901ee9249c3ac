#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/errors.hpp"
#include "wmin/linalg.hpp"
#include "wmin/radical.hpp"
#include "wmin/roots.hpp"
#include "wmin/spec.hpp"

using namespace wmin;

namespace {

SuperLieAlgebra algebra_of(const std::string& text) { return build_algebra(parse_spec(text)); }

Vec negated(const Vec& v) {
    Vec n = v;
    for (auto& c : n) c = -c;
    return n;
}

const RadicalScalar kOne{Rational(1)};
const RadicalScalar kZero{Rational(0)};

void run_integrity(const SuperLieAlgebra& alg) {
    CHECK(alg.dim == alg.n_cartan + static_cast<int>(alg.datum.all_roots.size()));
    CHECK_NOTHROW(check_super_jacobi(alg));
    CHECK_NOTHROW(check_form_properties(alg));
    CHECK_NOTHROW(check_weight_structure(alg));
}

/* Supercommutator of explicit matrices, written independently of the
   construction code: AB - (-1)^{p(A)p(B)} BA. */
Mat<RadicalScalar> test_mat_bracket(const Mat<RadicalScalar>& a, bool aodd,
                                    const Mat<RadicalScalar>& b, bool bodd) {
    Mat<RadicalScalar> ab = a * b;
    Mat<RadicalScalar> ba = b * a;
    int sign = (aodd && bodd) ? 1 : -1;
    Mat<RadicalScalar> out(ab.rows, ab.cols);
    for (size_t r = 0; r < ab.rows; ++r)
        for (size_t c = 0; c < ab.cols; ++c)
            out.at(r, c) = ab.at(r, c) + RadicalScalar(Rational(sign)) * ba.at(r, c);
    return out;
}

RadicalScalar test_supertrace(const Mat<RadicalScalar>& a, int n_even) {
    RadicalScalar s = kZero;
    for (int r = 0; r < static_cast<int>(a.rows); ++r) {
        if (r < n_even)
            s = s + a.at(r, r);
        else
            s = s - a.at(r, r);
    }
    return s;
}

/* True when a - b is a scalar multiple of the identity (the ambiguity left
   by the psl(2|2) quotient); for every other family the scalar is zero. */
bool equal_mod_identity(const Mat<RadicalScalar>& a, const Mat<RadicalScalar>& b,
                        bool allow_identity) {
    RadicalScalar shift = a.at(0, 0) - b.at(0, 0);
    if (!allow_identity && !shift.is_zero()) return false;
    for (size_t r = 0; r < a.rows; ++r) {
        for (size_t c = 0; c < a.cols; ++c) {
            RadicalScalar want = (r == c) ? b.at(r, c) + shift : b.at(r, c);
            if (!(a.at(r, c) == want)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("dimensions of the exceptional and sample classical algebras") {
    CHECK(algebra_of("D(2,1;a=1)").dim == 17);
    CHECK(algebra_of("G(3)").dim == 31);
    CHECK(algebra_of("F(4)").dim == 40);
    CHECK(algebra_of("sl(2|3)").dim == 24);
    CHECK(algebra_of("sl(2|4)").dim == 35);
    CHECK(algebra_of("psl(2|2)").dim == 14);
    CHECK(algebra_of("spo(2|0)").dim == 3);
    CHECK(algebra_of("spo(2|1)").dim == 5);
    CHECK(algebra_of("spo(2|3)").dim == 12);
    CHECK(algebra_of("osp(4|4)").dim == 32);
}

TEST_CASE("structure table integrity on every family") {
    const char* specs[] = {"sl(2|3)",     "sl(2|4)",  "psl(2|2)", "spo(2|0)", "spo(2|1)",
                           "spo(2|2)",    "spo(2|3)", "spo(2|4)", "spo(2|5)", "osp(4|4)",
                           "D(2,1;a=1)",  "D(2,1;a=-1/2)", "D(2,1;a=3)", "F(4)", "G(3)"};
    for (const char* s : specs) {
        CAPTURE(s);
        run_integrity(algebra_of(s));
    }
}

TEST_CASE("Casimir from dual bases acts as twice the dual Coxeter number") {
    const char* specs[] = {"sl(2|3)", "sl(2|4)", "psl(2|2)", "spo(2|0)", "spo(2|1)",
                           "spo(2|3)", "spo(2|4)", "spo(2|5)", "osp(4|4)",
                           "D(2,1;a=1)", "D(2,1;a=-2/5)", "F(4)", "G(3)"};
    for (const char* s : specs) {
        CAPTURE(s);
        SuperLieAlgebra alg = algebra_of(s);
        Rational expected = Rational(2) * dual_coxeter(alg.datum);
        CHECK(casimir_scalar(alg) == expected);
    }
    /* frozen spot values */
    CHECK(casimir_scalar(algebra_of("spo(2|1)")) == Rational(3));
    CHECK(casimir_scalar(algebra_of("sl(2|3)")) == Rational(-2));
    CHECK(casimir_scalar(algebra_of("F(4)")) == Rational(-4));
    CHECK(casimir_scalar(algebra_of("G(3)")) == Rational(-3));
    CHECK(casimir_scalar(algebra_of("psl(2|2)")) == Rational(0));
}

TEST_CASE("parity count matches the catalog superdimension") {
    const char* specs[] = {"sl(2|5)", "spo(2|6)", "osp(4|6)", "F(4)", "G(3)"};
    for (const char* s : specs) {
        CAPTURE(s);
        SuperLieAlgebra alg = algebra_of(s);
        long even = 0, odd_count = 0;
        for (bool p : alg.odd) (p ? odd_count : even)++;
        CHECK(even - odd_count == superdimension(alg.datum));
    }
}

TEST_CASE("matrix realization reproduces the abstract table") {
    const char* specs[] = {"sl(2|3)", "psl(2|2)", "spo(2|3)"};
    for (const char* s : specs) {
        CAPTURE(s);
        AlgebraSpec spec = parse_spec(s);
        SuperLieAlgebra alg = matrix_model_algebra(spec);
        MatrixModel model = matrix_realization(spec);
        REQUIRE(static_cast<int>(model.matrices.size()) == alg.dim);

        /* every matrix is supertraceless, even for the psl representatives */
        for (const auto& m : model.matrices)
            CHECK(test_supertrace(m, model.n_even).is_zero());

        /* the matrices are linearly independent */
        Mat<RadicalScalar> flat(alg.dim, model.n_total * model.n_total);
        for (int i = 0; i < alg.dim; ++i)
            for (int r = 0; r < model.n_total; ++r)
                for (int c = 0; c < model.n_total; ++c)
                    flat.at(i, r * model.n_total + c) = model.matrices[i].at(r, c);
        CHECK(rank(flat) == alg.dim);

        /* supercommutators match the bracket table entry by entry */
        for (int i = 0; i < alg.dim; ++i) {
            for (int j = 0; j < alg.dim; ++j) {
                Mat<RadicalScalar> got =
                    test_mat_bracket(model.matrices[i], model.odd[i], model.matrices[j], model.odd[j]);
                Mat<RadicalScalar> want(model.n_total, model.n_total);
                for (const auto& [k, c] : alg.bracket(i, j))
                    for (int r = 0; r < model.n_total; ++r)
                        for (int col = 0; col < model.n_total; ++col)
                            want.at(r, col) = want.at(r, col) + c * model.matrices[k].at(r, col);
                CHECK(equal_mod_identity(got, want, model.quotient_by_identity));
            }
        }

        /* the invariant form is the scaled supertrace form */
        for (int i = 0; i < alg.dim; ++i) {
            for (int j = 0; j < alg.dim; ++j) {
                Mat<RadicalScalar> prod = model.matrices[i] * model.matrices[j];
                RadicalScalar str_form =
                    RadicalScalar(model.form_scale) * test_supertrace(prod, model.n_even);
                CHECK(alg.form.at(i, j) == str_form);
            }
        }
    }
}

TEST_CASE("contragredient construction agrees with the matrix model") {
    const char* specs[] = {"spo(2|3)", "sl(2|3)", "spo(2|4)"};
    for (const char* s : specs) {
        CAPTURE(s);
        AlgebraSpec spec = parse_spec(s);
        SuperLieAlgebra mat = matrix_model_algebra(spec);
        SuperLieAlgebra con = contragredient_algebra(spec);
        run_integrity(con);
        CHECK(mat.dim == con.dim);
        CHECK(casimir_scalar(mat) == casimir_scalar(con));

        /* the products N_{a,b} N_{-a,-b} are invariant under any diagonal
           rescale that preserves (X_a|X_{-a}) = 1, so they must agree */
        const RootDatum& d = mat.datum;
        for (const Root& a : d.all_roots) {
            for (const Root& b : d.all_roots) {
                Vec sum(a.v.size());
                for (size_t t = 0; t < sum.size(); ++t) sum[t] = a.v[t] + b.v[t];
                if (d.root_index(sum) < 0) continue;
                RadicalScalar pm = structure_constant(mat, a.v, b.v) *
                                   structure_constant(mat, negated(a.v), negated(b.v));
                RadicalScalar pc = structure_constant(con, a.v, b.v) *
                                   structure_constant(con, negated(a.v), negated(b.v));
                CHECK(pm == pc);
            }
        }
    }
}

TEST_CASE("matrix models reject families without one") {
    CHECK_THROWS_AS(matrix_model_algebra(parse_spec("F(4)")), UnsupportedFamily);
    CHECK_THROWS_AS(matrix_realization(parse_spec("D(2,1;a=1)")), UnsupportedFamily);
    CHECK_THROWS_AS(contragredient_algebra(parse_spec("psl(2|2)")), UnsupportedFamily);
}

TEST_CASE("good choice realizes the involution coefficients on spo(2|5)") {
    SuperLieAlgebra alg = algebra_of("spo(2|5)");
    RootVectorBasis basis = good_choice(alg, lambda_zero(alg));
    std::vector<RadicalScalar> w = omega_root_coeffs(basis.alg, basis.lambda);
    const RootDatum& d = basis.alg.datum;
    for (size_t r = 0; r < d.all_roots.size(); ++r) {
        CAPTURE(r);
        /* the conjugate-linear map sends Y_a to t_a Y_{-a} with
           t_a = -sigma_a xi_a lambda_a */
        RadicalScalar want = RadicalScalar(Rational(-basis.sigma[r] * basis.xi[r])) *
                             basis.lambda_root[r];
        CHECK(w[r] == want);
        CHECK(w[r] == basis.t[r]);
    }
}

TEST_CASE("good choice fixes the highest root vector for every family") {
    const char* specs[] = {"sl(2|3)", "psl(2|2)", "spo(2|3)", "spo(2|4)", "osp(4|4)",
                           "D(2,1;a=1)", "D(2,1;a=-1/2)", "F(4)", "G(3)"};
    for (const char* s : specs) {
        CAPTURE(s);
        SuperLieAlgebra alg = algebra_of(s);
        RootVectorBasis basis = good_choice(alg, lambda_zero(alg));
        int ti = alg.datum.root_index(alg.datum.theta);
        REQUIRE(ti >= 0);
        CHECK(basis.t[ti] == kOne);
        int mi = alg.datum.root_index(negated(alg.datum.theta));
        CHECK(basis.t[mi] == kOne);
    }
}

TEST_CASE("form pairing of opposite root vectors carries the sign sigma") {
    SuperLieAlgebra alg = algebra_of("spo(2|3)");
    RootVectorBasis basis = good_choice(alg, lambda_zero(alg));
    const RootDatum& d = basis.alg.datum;
    for (size_t r = 0; r < d.all_roots.size(); ++r) {
        const Root& a = d.all_roots[r];
        int i = basis.alg.vec_of_root[r];
        int j = basis.alg.vec_of_root[d.root_index(negated(a.v))];
        RadicalScalar pairing = basis.alg.form.at(i, j);
        if (a.odd && !d.is_positive(a.v))
            CHECK(pairing == RadicalScalar(Rational(-1)));
        else
            CHECK(pairing == kOne);
        CHECK(pairing == RadicalScalar(Rational(basis.sigma[r])));
    }
}

TEST_CASE("lambda validation") {
    SuperLieAlgebra alg = algebra_of("spo(2|3)");
    Lambda l0 = lambda_zero(alg);

    Lambda zero = l0;
    zero.lam[0] = kZero;
    CHECK_THROWS_AS(omega_root_coeffs(alg, zero), BadLambda);

    Lambda short_list = l0;
    short_list.lam.pop_back();
    CHECK_THROWS_AS(omega_root_coeffs(alg, short_list), BadLambda);

    /* spo(2|3) simple roots: delta - eps_1 (odd), eps_1 (even) */
    Lambda wrong_real = l0;
    wrong_real.lam[0] = kOne;
    CHECK_THROWS_AS(omega_root_coeffs(alg, wrong_real), BadLambda);

    Lambda wrong_imag = l0;
    wrong_imag.lam[1] = RadicalScalar::i();
    CHECK_THROWS_AS(omega_root_coeffs(alg, wrong_imag), BadLambda);

    /* a different valid choice still works */
    Lambda stretched = l0;
    stretched.lam[0] = RadicalScalar(Rational(2)) * RadicalScalar::i();
    stretched.lam[1] = stretched.lam[1] * RadicalScalar(Rational(3));
    CHECK_NOTHROW(good_choice(alg, stretched));
}

TEST_CASE("structure constant identities for the good choice") {
    const char* specs[] = {"sl(2|3)", "spo(2|3)", "spo(2|4)", "osp(4|4)",
                           "D(2,1;a=1)", "F(4)", "G(3)"};
    for (const char* s : specs) {
        CAPTURE(s);
        SuperLieAlgebra raw = algebra_of(s);
        RootVectorBasis basis = good_choice(raw, lambda_zero(raw));
        const RootDatum& d = basis.alg.datum;
        const Vec& theta = d.theta;
        Vec mtheta = negated(theta);
        for (const Root& a : d.positive_roots) {
            if (!a.odd) continue;
            Vec am(a.v.size());
            for (size_t t = 0; t < am.size(); ++t) am[t] = a.v[t] - theta[t];
            if (d.root_index(am) < 0) continue;
            Vec theta_minus_a = negated(am);

            RadicalScalar n_down = structure_constant(basis, mtheta, a.v);
            CHECK(n_down * n_down == kOne);
            CHECK(n_down * structure_constant(basis, theta, am) == kOne);
            CHECK(n_down * structure_constant(basis, mtheta, theta_minus_a) == kOne);
            /* reality of the pairing constants */
            CHECK(n_down.is_real());
        }
    }
}

TEST_CASE("structure constant rejects non-root arguments") {
    SuperLieAlgebra alg = algebra_of("spo(2|3)");
    const RootDatum& d = alg.datum;
    Vec a = d.simple_roots[0].v;
    Vec doubled(a.size());
    for (size_t t = 0; t < a.size(); ++t) doubled[t] = a[t] + a[t] + a[t];
    CHECK_THROWS_AS(structure_constant(alg, a, doubled), NotARoot);
    /* theta + theta is never a root */
    CHECK_THROWS_AS(structure_constant(alg, d.theta, d.theta), NotARoot);
}

TEST_CASE("bracket mirror follows super anticommutativity") {
    SuperLieAlgebra alg = algebra_of("spo(2|3)");
    for (int i = 0; i < alg.dim; ++i) {
        for (int j = 0; j < alg.dim; ++j) {
            SVec ij = alg.bracket(i, j);
            SVec ji = alg.bracket(j, i);
            /* [a,b] = -(-1)^{p(a)p(b)} [b,a]: symmetric when both odd */
            int cancel = (alg.odd[i] && alg.odd[j]) ? -1 : 1;
            CHECK(sv_is_zero(sv_add(ij, sv_scale(ji, RadicalScalar(Rational(cancel))))));
        }
    }
}

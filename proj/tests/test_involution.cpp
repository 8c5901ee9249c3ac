#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/errors.hpp"
#include "wmin/involution.hpp"
#include "wmin/linalg.hpp"
#include "wmin/radical.hpp"
#include "wmin/roots.hpp"
#include "wmin/spec.hpp"

using namespace wmin;

namespace {

const RadicalScalar kOne{Rational(1)};

SuperLieAlgebra algebra_of(const std::string& text) { return build_algebra(parse_spec(text)); }

struct Pipeline {
    AlmostCompactData data;
    GradedDecomposition grading;
    std::vector<Component> comps;
};

Pipeline run_pipeline(const std::string& text) {
    AlmostCompactData data = almost_compact(algebra_of(text));
    GradedDecomposition grading = minimal_grading(data.basis.alg, data.triple);
    std::vector<Component> comps = component_split(data.basis.alg, grading);
    return Pipeline{std::move(data), std::move(grading), std::move(comps)};
}

Mat<RadicalScalar> test_conj(const Mat<RadicalScalar>& m) {
    Mat<RadicalScalar> out(m.rows, m.cols);
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c).conj();
    return out;
}

SVec mat_apply(const Mat<RadicalScalar>& m, const SVec& v) {
    SVec out;
    for (size_t r = 0; r < m.rows; ++r) {
        RadicalScalar s{Rational(0)};
        for (const auto& [j, c] : v) s = s + m.at(r, j) * c;
        if (!s.is_zero()) out.emplace_back(static_cast<int>(r), s);
    }
    return out;
}

void check_eigen_dims(const std::string& text, const std::vector<int>& want) {
    Pipeline p = run_pipeline(text);
    std::vector<int> got;
    for (const auto& space : p.grading.eigenspaces) got.push_back(static_cast<int>(space.size()));
    CAPTURE(text);
    CHECK(got == want);
    /* phi maps each eigenspace into itself */
    const Rational eigen[5] = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                               Rational(1)};
    const SuperLieAlgebra& alg = p.data.basis.alg;
    for (int s = 0; s < 5; ++s)
        for (const SVec& v : p.grading.eigenspaces[s]) {
            SVec pv = p.data.phi.apply(v);
            SVec moved = alg.bracket(p.data.triple.x, pv);
            CHECK(sv_is_zero(sv_sub(moved, sv_scale(pv, RadicalScalar(eigen[s])))));
        }
}

struct ComponentOracle {
    bool is_center;
    int dim;
    int rank;
    Rational u;
};

void check_components(const std::string& text, const std::vector<ComponentOracle>& want) {
    Pipeline p = run_pipeline(text);
    CAPTURE(text);
    REQUIRE(p.comps.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
        CAPTURE(i);
        CHECK(p.comps[i].is_center == want[i].is_center);
        CHECK(p.comps[i].dim == want[i].dim);
        CHECK(p.comps[i].rank == want[i].rank);
        CHECK(p.comps[i].u == want[i].u);
        CHECK(static_cast<int>(p.comps[i].cartan.size()) == want[i].rank);
    }
}

}  // namespace

TEST_CASE("distinguished involution negates the Cartan and mirrors root vectors") {
    SuperLieAlgebra alg = algebra_of("sl(2|3)");
    RootVectorBasis basis = good_choice(alg, lambda_zero(alg));
    ConjugateLinearMap phi = omega_involution(basis, basis.lambda);
    CHECK_NOTHROW(check_involution(basis.alg, phi));

    for (int h = 0; h < basis.alg.n_cartan; ++h) {
        SVec img = phi.apply(sv_unit(h));
        CHECK(sv_is_zero(sv_add(img, sv_unit(h))));
    }
    const RootDatum& d = basis.alg.datum;
    int ti = d.root_index(d.theta);
    Vec mtheta = d.theta;
    for (auto& c : mtheta) c = -c;
    int mi = d.root_index(mtheta);
    SVec img = phi.apply(sv_unit(basis.alg.vec_of_root[ti]));
    CHECK(sv_is_zero(sv_sub(img, sv_unit(basis.alg.vec_of_root[mi]))));
}

TEST_CASE("involution checker rejects defective maps") {
    SuperLieAlgebra alg = algebra_of("spo(2|3)");
    RootVectorBasis basis = good_choice(alg, lambda_zero(alg));
    ConjugateLinearMap phi = omega_involution(basis, basis.lambda);

    ConjugateLinearMap doubled = phi;
    for (auto& e : doubled.m.data) e = e * RadicalScalar(Rational(2));
    CHECK_THROWS_AS(check_involution(basis.alg, doubled), NotInvolution);

    /* flipping the sign of one root vector squares to the identity but is
       no longer a bracket automorphism */
    ConjugateLinearMap flip;
    flip.m = Mat<RadicalScalar>::identity(basis.alg.dim);
    flip.m.at(basis.alg.n_cartan, basis.alg.n_cartan) = RadicalScalar(Rational(-1));
    CHECK_THROWS_AS(check_involution(basis.alg, flip), ConsistencyFailure);

    ConjugateLinearMap wrong_shape;
    wrong_shape.m = Mat<RadicalScalar>::identity(basis.alg.dim + 1);
    CHECK_THROWS_AS(check_involution(basis.alg, wrong_shape), NotInvolution);
}

TEST_CASE("almost compact structure exists across the catalog") {
    const char* specs[] = {"sl(2|3)",       "sl(2|4)",       "psl(2|2)",   "spo(2|0)",
                           "spo(2|1)",      "spo(2|2)",      "spo(2|3)",   "spo(2|4)",
                           "spo(2|5)",      "osp(4|4)",      "D(2,1;a=1)", "D(2,1;a=-1/2)",
                           "D(2,1;a=3)",    "F(4)",          "G(3)"};
    for (const char* s : specs) {
        CAPTURE(s);
        AlmostCompactData data = almost_compact(algebra_of(s));
        const SuperLieAlgebra& a = data.basis.alg;
        CHECK(sv_is_zero(sv_sub(data.phi.apply(data.triple.e), data.triple.e)));
        CHECK(sv_is_zero(sv_sub(data.phi.apply(data.triple.x), data.triple.x)));
        CHECK(sv_is_zero(sv_sub(data.phi.apply(data.triple.f), data.triple.f)));
        CHECK(a.form_pair(data.triple.x, data.triple.x) == RadicalScalar(Rational(1, 2)));
        SVec ef = a.bracket(data.triple.e, data.triple.f);
        CHECK(sv_is_zero(sv_sub(ef, sv_scale(data.triple.x, RadicalScalar(Rational(2))))));
    }
}

TEST_CASE("grading eigenspace dimensions") {
    check_eigen_dims("sl(2|3)", {1, 6, 10, 6, 1});
    check_eigen_dims("sl(2|4)", {1, 8, 17, 8, 1});
    check_eigen_dims("psl(2|2)", {1, 4, 4, 4, 1});
    check_eigen_dims("spo(2|3)", {1, 3, 4, 3, 1});
    check_eigen_dims("spo(2|5)", {1, 5, 11, 5, 1});
    check_eigen_dims("osp(4|4)", {1, 8, 14, 8, 1});
    check_eigen_dims("D(2,1;a=1)", {1, 4, 7, 4, 1});
    check_eigen_dims("F(4)", {1, 8, 22, 8, 1});
    check_eigen_dims("G(3)", {1, 7, 15, 7, 1});
}

TEST_CASE("centralizer splits into the expected components") {
    check_components("sl(2|3)", {{true, 1, 1, Rational(2)}, {false, 8, 2, Rational(-2)}});
    check_components("sl(2|4)", {{true, 1, 1, Rational(2)}, {false, 15, 3, Rational(-2)}});
    check_components("psl(2|2)", {{false, 3, 1, Rational(-2)}});
    check_components("spo(2|0)", {});
    check_components("spo(2|1)", {});
    check_components("spo(2|2)", {{true, 1, 1, Rational(2)}});
    check_components("spo(2|3)", {{false, 3, 1, Rational(-1, 2)}});
    check_components("spo(2|4)", {{false, 3, 1, Rational(-1)}, {false, 3, 1, Rational(-1)}});
    check_components("spo(2|5)", {{false, 10, 2, Rational(-1)}});
    check_components("osp(4|4)", {{false, 3, 1, Rational(2)}, {false, 10, 2, Rational(-4)}});
    check_components("D(2,1;a=1)", {{false, 3, 1, Rational(-4)}, {false, 3, 1, Rational(2)}});
    check_components("D(2,1;a=-1/2)", {{false, 3, 1, Rational(-1)}, {false, 3, 1, Rational(-1)}});
    check_components("D(2,1;a=3)", {{false, 3, 1, Rational(-8)}, {false, 3, 1, Rational(6)}});
    check_components("F(4)", {{false, 21, 3, Rational(-4, 3)}});
    check_components("G(3)", {{false, 14, 2, Rational(-3, 2)}});

    /* equal-size pairs are ordered by the highest simple-root index:
       the cluster through the last simple root comes first */
    Pipeline d21 = run_pipeline("D(2,1;a=-1/2)");
    Vec two_delta{Rational(0), Rational(0), Rational(2)};
    Vec eps_diff{Rational(1), Rational(-1), Rational(0)};
    CHECK(d21.comps[0].theta_i == two_delta);
    CHECK(d21.comps[1].theta_i == eps_diff);

    Pipeline spo4 = run_pipeline("spo(2|4)");
    Vec eps_sum{Rational(0), Rational(1), Rational(1)};
    CHECK(spo4.comps[0].theta_i == eps_sum);
}

TEST_CASE("fixed real points carry a negative definite Killing form") {
    Pipeline p = run_pipeline("F(4)");
    REQUIRE(p.comps.size() == 1);
    std::vector<SVec> rb = fixed_real_basis(p.data.basis, p.comps[0]);
    CHECK(rb.size() == 21);
    for (const SVec& v : rb) CHECK(sv_is_zero(sv_sub(p.data.phi.apply(v), v)));

    Mat<RadicalScalar> k = killing_matrix(p.data.basis.alg, rb);
    CHECK(k == k.transposed());
    for (const auto& e : k.data) CHECK(e.is_real());
    CHECK_NOTHROW(check_negative_definite(k));

    Pipeline g3 = run_pipeline("G(3)");
    std::vector<SVec> rb2 = fixed_real_basis(g3.data.basis, g3.comps[0]);
    CHECK(rb2.size() == 14);
    CHECK_NOTHROW(check_negative_definite(killing_matrix(g3.data.basis.alg, rb2)));
}

TEST_CASE("definiteness checker reports nonnegative directions") {
    Mat<RadicalScalar> bad(2, 2);
    bad.at(0, 0) = RadicalScalar(Rational(-1));
    bad.at(0, 1) = bad.at(1, 0) = RadicalScalar(Rational(2));
    bad.at(1, 1) = RadicalScalar(Rational(-1));
    CHECK_THROWS_AS(check_negative_definite(bad), CompactnessFailure);

    Mat<RadicalScalar> first(2, 2);
    first.at(0, 0) = RadicalScalar(Rational(1));
    first.at(1, 1) = RadicalScalar(Rational(-1));
    CHECK_THROWS_AS(check_negative_definite(first), CompactnessFailure);

    Mat<RadicalScalar> good(2, 2);
    good.at(0, 0) = good.at(1, 1) = RadicalScalar(Rational(-2));
    good.at(0, 1) = good.at(1, 0) = RadicalScalar(Rational(1));
    CHECK_NOTHROW(check_negative_definite(good));
}

TEST_CASE("short grading splits the type I families") {
    SuperLieAlgebra alg = algebra_of("sl(2|3)");
    std::vector<int> deg = short_grading(alg);
    int plus = 0, minus = 0, zero = 0;
    for (int v : deg) {
        if (v == 1) ++plus;
        if (v == -1) ++minus;
        if (v == 0) ++zero;
    }
    CHECK(plus == 6);
    CHECK(minus == 6);
    CHECK(zero == 12);

    CHECK_NOTHROW(short_grading(algebra_of("psl(2|2)")));
    CHECK_THROWS_AS(short_grading(algebra_of("spo(2|3)")), NotTypeI);
    CHECK_THROWS_AS(short_grading(algebra_of("F(4)")), NotTypeI);
}

TEST_CASE("scaling automorphisms form a group and preserve the bracket") {
    SuperLieAlgebra alg = algebra_of("sl(2|3)");
    CHECK(delta_automorphism(alg, RadicalScalar(Rational(1))) ==
          Mat<RadicalScalar>::identity(alg.dim));
    Mat<RadicalScalar> d2 = delta_automorphism(alg, RadicalScalar(Rational(2)));
    Mat<RadicalScalar> d3 = delta_automorphism(alg, RadicalScalar(Rational(3)));
    Mat<RadicalScalar> d6 = delta_automorphism(alg, RadicalScalar(Rational(6)));
    CHECK(d2 * d3 == d6);

    SuperLieAlgebra psl = algebra_of("psl(2|2)");
    Mat<RadicalScalar> d = delta_automorphism(psl, RadicalScalar(Rational(2)));
    for (int i = 0; i < psl.dim; ++i)
        for (int j = 0; j < psl.dim; ++j) {
            SVec lhs = mat_apply(d, psl.bracket(i, j));
            SVec rhs = psl.bracket(mat_apply(d, sv_unit(i)), mat_apply(d, sv_unit(j)));
            CHECK(sv_is_zero(sv_sub(lhs, rhs)));
        }

    CHECK_THROWS_AS(delta_automorphism(alg, RadicalScalar(Rational(0))), BadParameter);
    CHECK_THROWS_AS(delta_automorphism(algebra_of("spo(2|4)"), RadicalScalar(Rational(2))),
                    NotTypeI);
}

TEST_CASE("scaling conjugation rescales the involution data") {
    SuperLieAlgebra alg = algebra_of("sl(2|3)");
    RootVectorBasis basis = good_choice(alg, lambda_zero(alg));
    Mat<RadicalScalar> m = omega_involution(basis, basis.lambda).m;

    /* conjugating by the scaling automorphism multiplies the coefficient on
       each simple root by |lambda|^{-2 deg} */
    RadicalScalar ii = RadicalScalar::i();
    Lambda scaled;
    scaled.lam = {ii * RadicalScalar(Rational(1, 4)), kOne, kOne, ii * RadicalScalar(Rational(4))};
    Mat<RadicalScalar> target = omega_involution(basis, scaled).m;

    Mat<RadicalScalar> d = delta_automorphism(basis.alg, RadicalScalar(Rational(2)));
    CHECK(d * m * inverse(test_conj(d)) == target);

    /* only the modulus of the scaling parameter enters */
    Mat<RadicalScalar> di = delta_automorphism(basis.alg, ii * RadicalScalar(Rational(2)));
    CHECK(di * m * inverse(test_conj(di)) == target);
}

TEST_CASE("the involution is the unique intertwiner on the lower half space") {
    const char* specs[] = {"spo(2|3)", "spo(2|4)", "spo(2|5)", "osp(4|4)",
                           "D(2,1;a=1)", "F(4)", "G(3)"};
    for (const char* s : specs) {
        CAPTURE(s);
        Pipeline p = run_pipeline(s);
        CHECK(half_space_intertwiners(p.data.basis.alg, p.data.phi, p.grading, p.comps) == 1);
    }
}

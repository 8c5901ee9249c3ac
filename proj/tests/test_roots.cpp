#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wmin/roots.hpp"
#include "wmin/spec.hpp"

using namespace wmin;

namespace {

RootDatum datum_of(const std::string& text) { return root_system(parse_spec(text)); }

long count_roots(const RootDatum& d, bool odd) {
    long n = 0;
    for (const auto& r : d.all_roots)
        if (r.odd == odd) ++n;
    return n;
}

/* dimension of the underlying algebra, by classical formulas */
long algebra_dim(const AlgebraSpec& s) {
    switch (s.family) {
        case Family::SL2m:
            return (s.m + 2) * (s.m + 2) - 1;
        case Family::PSL22:
            return 14;
        case Family::SPO2m:
            return 3 + s.m * (s.m - 1) / 2 + 2 * s.m;
        case Family::OSP4m:
            return 6 + s.m * (s.m + 1) / 2 + 4 * s.m;
        case Family::D21a:
            return 17;
        case Family::F4:
            return 40;
        case Family::G3:
            return 31;
    }
    return 0;
}

void check_structure(const RootDatum& d) {
    /* negation closure with parity preserved */
    for (const auto& r : d.all_roots) {
        Vec neg(r.v.size());
        for (size_t i = 0; i < r.v.size(); ++i) neg[i] = -r.v[i];
        int j = d.root_index(neg);
        REQUIRE(j >= 0);
        CHECK(d.all_roots[j].odd == r.odd);
    }
    /* positive set is exactly half, closed under the first-nonzero rule */
    CHECK(d.positive_roots.size() * 2 == d.all_roots.size());
    for (const auto& r : d.positive_roots) {
        CHECK(d.is_positive(r.v));
        auto c = d.simple_coords(r.v);
        for (const auto& x : c) {
            CHECK(x.sign() >= 0);
            CHECK(x.is_integer());
        }
    }
    /* highest root dominates every positive root */
    auto tc = d.simple_coords(d.theta);
    for (const auto& r : d.positive_roots) {
        auto c = d.simple_coords(r.v);
        for (size_t i = 0; i < c.size(); ++i) CHECK((tc[i] - c[i]).sign() >= 0);
    }
    CHECK(d.form(d.theta, d.theta) == Rational(2));
    /* deterministic ordering puts -theta first and theta last */
    Vec neg_theta(d.theta.size());
    for (size_t i = 0; i < neg_theta.size(); ++i) neg_theta[i] = -d.theta[i];
    CHECK(d.all_roots.front().v == neg_theta);
    CHECK(d.all_roots.back().v == d.theta);
    /* root count against the classical dimension */
    long expected = algebra_dim(d.spec) - d.algebra_cartan_dim;
    CHECK((long)d.all_roots.size() == expected);
    /* simple roots appear among the positive roots, in order */
    for (const auto& s : d.simple_roots) CHECK(d.positive_index(s.v) >= 0);
}

}  // namespace

TEST_CASE("parse accepts the catalog grammar") {
    AlgebraSpec s = parse_spec("sl(2|4)");
    CHECK(s.family == Family::SL2m);
    CHECK(s.m == 4);
    CHECK(parse_spec("psl(2|2)").family == Family::PSL22);
    CHECK(parse_spec("spo(2|0)").m == 0);
    CHECK(parse_spec("spo(2|11)").m == 11);
    CHECK(parse_spec("osp(4|6)").m == 6);
    AlgebraSpec d = parse_spec("D(2,1;a=-3/5)");
    CHECK(d.family == Family::D21a);
    CHECK(d.a == Rational(-3, 5));
    CHECK(parse_spec("D(2,1;a=2)").a == Rational(2));
    CHECK(parse_spec("F(4)").family == Family::F4);
    CHECK(parse_spec("G(3)").family == Family::G3);
    CHECK(parse_spec("sl(2|4)").name() == "sl(2|4)");
    CHECK(parse_spec("D(2,1;a=-3/5)").name() == "D(2,1;a=-3/5)");
}

TEST_CASE("parse rejects bad syntax and unsupported parameters") {
    CHECK_THROWS_AS(parse_spec(""), ParseError);
    CHECK_THROWS_AS(parse_spec("sl(2|x)"), ParseError);
    CHECK_THROWS_AS(parse_spec("psl(2|3)"), ParseError);
    CHECK_THROWS_AS(parse_spec("so(5)"), ParseError);
    CHECK_THROWS_AS(parse_spec("sl(2|4) "), ParseError);
    CHECK_THROWS_AS(parse_spec("sl(2|2)"), UnsupportedParameter);
    CHECK_THROWS_AS(parse_spec("sl(2|1)"), UnsupportedParameter);
    CHECK_THROWS_AS(parse_spec("osp(4|3)"), UnsupportedParameter);
    CHECK_THROWS_AS(parse_spec("osp(4|2)"), UnsupportedParameter);
    CHECK_THROWS_AS(parse_spec("D(2,1;a=0)"), UnsupportedParameter);
    CHECK_THROWS_AS(parse_spec("D(2,1;a=-1)"), UnsupportedParameter);
}

TEST_CASE("root counts for the two fixed examples") {
    RootDatum psl = datum_of("psl(2|2)");
    CHECK(count_roots(psl, false) == 4);
    CHECK(count_roots(psl, true) == 8);
    CHECK(psl.cartan_dim == 3);
    CHECK(psl.algebra_cartan_dim == 2);

    RootDatum f4 = datum_of("F(4)");
    CHECK(count_roots(f4, false) == 20);
    CHECK(count_roots(f4, true) == 16);
    CHECK(f4.cartan_dim == 4);
}

TEST_CASE("highest root of G(3) is twice the isotropic-direction generator") {
    RootDatum g3 = datum_of("G(3)");
    /* coordinates are (delta, eps1, eps2) */
    CHECK(g3.theta == Vec{Rational(2), Rational(0), Rational(0)});
    CHECK(g3.gram.at(0, 0) == Rational(1, 2));
    CHECK(g3.gram.at(1, 1) == Rational(-1, 2));
    CHECK(g3.gram.at(2, 2) == Rational(-1, 2));
    CHECK(g3.gram.at(1, 2) == Rational(1, 4));
    CHECK(g3.form(g3.theta, g3.theta) == Rational(2));
    CHECK(count_roots(g3, false) == 14);
    CHECK(count_roots(g3, true) == 14);
    /* exactly two non-isotropic odd roots (the +-delta pair) */
    long noniso = 0;
    for (const auto& r : g3.all_roots)
        if (r.odd && !g3.form(r.v, r.v).is_zero()) ++noniso;
    CHECK(noniso == 2);
}

TEST_CASE("structural invariants hold across the catalog") {
    for (const char* text :
         {"sl(2|3)", "sl(2|4)", "sl(2|5)", "sl(2|8)", "psl(2|2)", "spo(2|0)", "spo(2|1)",
          "spo(2|2)", "spo(2|3)", "spo(2|4)", "spo(2|5)", "spo(2|7)", "spo(2|8)", "osp(4|4)",
          "osp(4|6)", "osp(4|8)", "D(2,1;a=1)", "D(2,1;a=-1/2)", "D(2,1;a=-2/5)", "D(2,1;a=3)",
          "F(4)", "G(3)"}) {
        CAPTURE(text);
        check_structure(datum_of(text));
    }
}

TEST_CASE("gram matrices match the catalog normalization") {
    RootDatum f4 = datum_of("F(4)");
    /* coordinates (delta, eps1, eps2, eps3) */
    CHECK(f4.gram.at(0, 0) == Rational(2));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(f4.gram.at(i, j) == (i == j ? Rational(-2, 3) : Rational(0)));

    RootDatum sl = datum_of("sl(2|5)");
    CHECK(sl.gram.at(0, 0) == Rational(1));
    CHECK(sl.gram.at(2, 2) == Rational(-1));

    RootDatum spo = datum_of("spo(2|7)");
    CHECK(spo.gram.at(0, 0) == Rational(1, 2));
    CHECK(spo.gram.at(1, 1) == Rational(-1, 2));

    /* one-parameter family: even-root norms 2a, 2, -2-2a; odd roots isotropic */
    Rational a(-2, 5);
    RootDatum d = root_system(parse_spec("D(2,1;a=-2/5)"));
    std::vector<Rational> norms;
    for (const auto& r : d.positive_roots)
        if (!r.odd) norms.push_back(d.form(r.v, r.v));
    REQUIRE(norms.size() == 3);
    /* positive even roots in height order: 2delta, eps1-eps2, eps1+eps2 */
    bool found_2a = false, found_2 = false, found_other = false;
    for (const auto& n : norms) {
        if (n == Rational(2) * a) found_2a = true;
        if (n == Rational(2)) found_2 = true;
        if (n == Rational(-2) - Rational(2) * a) found_other = true;
    }
    CHECK(found_2a);
    CHECK(found_2);
    CHECK(found_other);
    for (const auto& r : d.all_roots)
        if (r.odd) CHECK(d.form(r.v, r.v).is_zero());

    /* simple-root gram for the one-parameter family */
    auto g = [&](int i, int j) { return d.form(d.simple_roots[i].v, d.simple_roots[j].v); };
    CHECK(g(0, 0) == Rational(2) * a);
    CHECK(g(0, 1) == -a);
    CHECK(g(0, 2) == Rational(0));
    CHECK(g(1, 1) == Rational(0));
    CHECK(g(1, 2) == Rational(1) + a);
    CHECK(g(2, 2) == Rational(-2) - Rational(2) * a);
}

TEST_CASE("dual Coxeter numbers") {
    CHECK(dual_coxeter(datum_of("F(4)")) == Rational(-2));
    CHECK(dual_coxeter(datum_of("psl(2|2)")) == Rational(0));
    CHECK(dual_coxeter(datum_of("spo(2|7)")) == Rational(-3, 2));
    CHECK(dual_coxeter(datum_of("G(3)")) == Rational(-3, 2));
    for (int m = 3; m <= 12; ++m) {
        CAPTURE(m);
        CHECK(dual_coxeter(datum_of("sl(2|" + std::to_string(m) + ")")) == Rational(2 - m));
    }
    for (int m : {4, 6, 8})
        CHECK(dual_coxeter(datum_of("osp(4|" + std::to_string(m) + ")")) == Rational(2 - m));
    for (int m = 0; m <= 8; ++m) {
        CAPTURE(m);
        CHECK(dual_coxeter(datum_of("spo(2|" + std::to_string(m) + ")")) ==
              Rational(2) - Rational(m, 2));
    }
    for (const char* t : {"D(2,1;a=1)", "D(2,1;a=-2/5)", "D(2,1;a=3)"})
        CHECK(dual_coxeter(datum_of(t)) == Rational(0));
}

TEST_CASE("superdimensions") {
    CHECK(superdimension(datum_of("psl(2|2)")) == -2);
    CHECK(superdimension(datum_of("G(3)")) == 3);
    CHECK(superdimension(datum_of("D(2,1;a=-2/5)")) == 1);
    CHECK(superdimension(datum_of("F(4)")) == 8);
    for (int m = 3; m <= 8; ++m) {
        CAPTURE(m);
        CHECK(superdimension(datum_of("sl(2|" + std::to_string(m) + ")")) ==
              (m - 1) * (m - 3));
    }
    CHECK(superdimension(datum_of("spo(2|3)")) == 0);
    CHECK(superdimension(datum_of("spo(2|4)")) == 1);
    CHECK(superdimension(datum_of("spo(2|0)")) == 3);
}

TEST_CASE("small catalog members have the expected simple systems") {
    RootDatum s3 = datum_of("spo(2|3)");
    REQUIRE(s3.simple_roots.size() == 2);
    /* coordinates (delta, eps1): simple roots delta-eps1 (odd), eps1 (even) */
    CHECK(s3.simple_roots[0].v == Vec{Rational(1), Rational(-1)});
    CHECK(s3.simple_roots[0].odd);
    CHECK(s3.simple_roots[1].v == Vec{Rational(0), Rational(1)});
    CHECK(!s3.simple_roots[1].odd);
    CHECK(s3.theta == Vec{Rational(2), Rational(0)});

    RootDatum s2 = datum_of("spo(2|2)");
    REQUIRE(s2.simple_roots.size() == 2);
    CHECK(s2.simple_roots[0].v == Vec{Rational(1), Rational(-1)});
    CHECK(s2.simple_roots[1].v == Vec{Rational(1), Rational(1)});
    CHECK(s2.simple_roots[0].odd);
    CHECK(s2.simple_roots[1].odd);

    RootDatum s0 = datum_of("spo(2|0)");
    REQUIRE(s0.simple_roots.size() == 1);
    CHECK(s0.simple_roots[0].v == Vec{Rational(2)});
    CHECK(!s0.simple_roots[0].odd);
    CHECK(s0.all_roots.size() == 2);

    RootDatum s1 = datum_of("spo(2|1)");
    REQUIRE(s1.simple_roots.size() == 1);
    CHECK(s1.simple_roots[0].v == Vec{Rational(1)});
    CHECK(s1.simple_roots[0].odd);
    CHECK(s1.all_roots.size() == 4);

    RootDatum s4 = datum_of("spo(2|4)");
    REQUIRE(s4.simple_roots.size() == 3);
    CHECK(s4.simple_roots[2].v == Vec{Rational(0), Rational(1), Rational(1)});
}

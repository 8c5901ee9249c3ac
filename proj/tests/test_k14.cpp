#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wmin/algebra.hpp"
#include "wmin/contact.hpp"
#include "wmin/errors.hpp"
#include "wmin/involution.hpp"
#include "wmin/linalg.hpp"
#include "wmin/radical.hpp"
#include "wmin/rational.hpp"
#include "wmin/roots.hpp"
#include "wmin/spec.hpp"

using namespace wmin;

namespace {

ContactElement mono(int p, unsigned m) { return ContactElement::monomial(p, m, RadicalScalar(1)); }

ContactElement scaled(const Rational& c, const ContactElement& f) {
    return RadicalScalar(c) * f;
}

/* every monomial of weighted degree at most six, with its parity */
std::vector<std::pair<ContactElement, int>> low_degree_monomials() {
    std::vector<std::pair<ContactElement, int>> out;
    for (int p = 0; p <= 3; ++p)
        for (unsigned m = 0; m < 16; ++m) {
            if (2 * p + std::popcount(m) > 6) continue;
            out.push_back({mono(p, m), std::popcount(m) % 2});
        }
    return out;
}

const K14Realization& k14_of(const Rational& b) {
    static std::map<std::string, K14Realization> cache;
    std::string key = b.to_string();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, k14_realization(b)).first;
    return it->second;
}

ContactElement contact_of(const K14Realization& k, const SVec& v) {
    ContactElement out;
    for (const auto& [slot, c] : v) out += c * k.elements[slot];
    return out;
}

bool sv_equal(const SVec& a, const SVec& b) { return sv_sub(a, b).empty(); }

/* stack sparse algebra vectors as rows split into real and imaginary
   parts, for real-span rank arguments */
Mat<RadicalScalar> realified_rows(const std::vector<SVec>& vecs, int dim) {
    Mat<RadicalScalar> m(vecs.size(), 2 * dim);
    for (size_t r = 0; r < vecs.size(); ++r)
        for (const auto& [slot, c] : vecs[r]) {
            m.at(r, 2 * slot) = c.real_part();
            m.at(r, 2 * slot + 1) = c.imag_part();
        }
    return m;
}

SuperLieAlgebra algebra_of(Family fam, int m = 0, Rational a = Rational(0)) {
    AlgebraSpec spec;
    spec.family = fam;
    spec.m = m;
    spec.a = a;
    return build_algebra(spec);
}

}  // namespace

TEST_CASE("contact bracket closed forms") {
    ContactElement t = ContactElement::t();
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            ContactElement got = contact_bracket(ContactElement::xi(i), ContactElement::xi(j));
            if (i == j)
                CHECK(got == -ContactElement::one());
            else
                CHECK(got.is_zero());
        }
    CHECK(contact_bracket(t, t).is_zero());

    /* ad t is the weighted degree minus two, termwise */
    for (const auto& [m, parity] : low_degree_monomials()) {
        (void)parity;
        CHECK(contact_bracket(t, m) == scaled(Rational(m.deg_prime() - 2), m));
    }

    /* odd complements of each variable, increasing factor order */
    CHECK(k14_xi_hat(1) == mono(0, 0b1110u));
    CHECK(k14_xi_hat(2) == -mono(0, 0b1101u));
    CHECK(k14_xi_hat(3) == mono(0, 0b1011u));
    CHECK(k14_xi_hat(4) == -mono(0, 0b0111u));

    for (Rational b : {Rational(0), Rational(3), Rational(-1, 2)}) {
        ContactElement central = -(t * t) + scaled(Rational(2) * b, k14_xi_top());
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                ContactElement got = contact_bracket(k14_a(i, b), k14_a(j, b));
                if (i == j)
                    CHECK(got == central);
                else
                    CHECK(got.is_zero());
            }
    }
}

TEST_CASE("contact bracket super anticommutativity and Jacobi, degree at most six") {
    std::vector<std::pair<ContactElement, int>> ms = low_degree_monomials();
    size_t n = ms.size();
    CHECK(n == 44);

    std::vector<std::vector<ContactElement>> br(n, std::vector<ContactElement>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) br[i][j] = contact_bracket(ms[i].first, ms[j].first);

    size_t anti_failures = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            ContactElement sum = br[i][j];
            if (ms[i].second * ms[j].second != 0)
                sum -= br[j][i];
            else
                sum += br[j][i];
            if (!sum.is_zero()) ++anti_failures;
        }
    CHECK(anti_failures == 0);

    size_t jacobi_failures = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                int pi = ms[i].second, pj = ms[j].second, pk = ms[k].second;
                ContactElement sum;
                ContactElement term = contact_bracket(ms[i].first, br[j][k]);
                sum += (pi * pk != 0) ? -term : term;
                term = contact_bracket(ms[j].first, br[k][i]);
                sum += (pj * pi != 0) ? -term : term;
                term = contact_bracket(ms[k].first, br[i][j]);
                sum += (pk * pj != 0) ? -term : term;
                if (!sum.is_zero()) ++jacobi_failures;
            }
    CHECK(jacobi_failures == 0);
}

TEST_CASE("degree-one layer of the full contact algebra") {
    /* first summand t xi_i: brackets span exactly the line through t^2 */
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            ContactElement got = contact_bracket(mono(1, 1u << (i - 1)), mono(1, 1u << (j - 1)));
            if (i == j)
                CHECK(got == -mono(2, 0u));
            else
                CHECK(got.is_zero());
        }
    /* second summand, the cubic forms: brackets vanish identically */
    std::vector<unsigned> cubics = {0b0111u, 0b1011u, 0b1101u, 0b1110u};
    for (unsigned s : cubics)
        for (unsigned u : cubics) CHECK(contact_bracket(mono(0, s), mono(0, u)).is_zero());
}

TEST_CASE("highest-root triple of the contact model") {
    for (Rational b : {Rational(0), Rational(3), Rational(-3)}) {
        ContactElement t = ContactElement::t();
        ContactElement e = -(t * t) + scaled(Rational(2) * b, k14_xi_top());
        ContactElement x = scaled(Rational(1, 2), t);
        ContactElement f = -ContactElement::one();
        CHECK(contact_bracket(x, e) == e);
        CHECK(contact_bracket(x, f) == -f);
        CHECK(contact_bracket(e, f) == scaled(Rational(-4), t));
        /* after rescaling one leg the bracket closes on the grading element */
        CHECK(contact_bracket(e, scaled(Rational(-1, 8), f)) == x);
    }
}

TEST_CASE("contact realization dimensions and parameter map") {
    const std::vector<std::pair<Rational, Rational>> table = {
        {Rational(0), Rational(1)},
        {Rational(3), Rational(-2)},
        {Rational(-3), Rational(-1, 2)},
        {Rational(1, 5), Rational(3, 2)},
    };
    for (const auto& [b, a] : table) {
        const K14Realization& k = k14_of(b);
        CHECK(k.a == a);
        CHECK(k.algebra.dim == 17);
        CHECK(k.algebra.datum.spec.family == Family::D21a);
        CHECK(k.algebra.datum.spec.a == a);
        CHECK(k.elements.size() == 17);
        /* the third simple root space is the line through e, fixed by the
           grading element t/2; its opposite is the line of constants */
        const RootDatum& d = k.algebra.datum;
        ContactElement top =
            contact_of(k, sv_unit(k.algebra.root_vec(d.root_index(d.simple_roots[2].v))));
        REQUIRE(!top.is_zero());
        auto lead = top.terms().find(k.e.terms().begin()->first);
        REQUIRE(lead != top.terms().end());
        CHECK(k.e == (k.e.terms().begin()->second / lead->second) * top);
        CHECK(contact_bracket(k.x, top) == top);
        Vec low = d.simple_roots[2].v;
        for (auto& c : low) c = -c;
        ContactElement bottom = contact_of(k, sv_unit(k.algebra.root_vec(d.root_index(low))));
        REQUIRE(!bottom.is_zero());
        CHECK(contact_bracket(k.x, bottom) == -bottom);
        CHECK(bottom == ContactElement::monomial(0, 0u, bottom.terms().begin()->second));
    }
    CHECK_THROWS_AS(k14_realization(Rational(1)), DegenerateParameter);
    CHECK_THROWS_AS(k14_realization(Rational(-1)), DegenerateParameter);
}

TEST_CASE("contact realization is a basic Lie superalgebra") {
    for (Rational b : {Rational(0), Rational(3), Rational(-3), Rational(1, 5)}) {
        const K14Realization& k = k14_of(b);
        CHECK_NOTHROW(check_super_jacobi(k.algebra));
        CHECK_NOTHROW(check_form_properties(k.algebra));
        CHECK_NOTHROW(check_weight_structure(k.algebra));
        CHECK(casimir_scalar(k.algebra) == Rational(0));
    }
}

TEST_CASE("extracted Cartan matrix") {
    for (Rational b : {Rational(0), Rational(3), Rational(-3), Rational(1, 5)}) {
        const K14Realization& k = k14_of(b);
        CartanMatrix want(3, 3);
        want.at(0, 0) = Rational(0);
        want.at(0, 1) = Rational(1);
        want.at(0, 2) = k.a;
        want.at(1, 0) = Rational(-1);
        want.at(1, 1) = Rational(2);
        want.at(1, 2) = Rational(0);
        want.at(2, 0) = Rational(-1);
        want.at(2, 1) = Rational(0);
        want.at(2, 2) = Rational(2);
        CHECK(k.cartan_matrix == want);
    }
}

TEST_CASE("contact and contragredient structure constants agree") {
    for (Rational b : {Rational(0), Rational(3), Rational(-3), Rational(1, 5)}) {
        const K14Realization& k = k14_of(b);
        SuperLieAlgebra cg = algebra_of(Family::D21a, 0, k.a);
        REQUIRE(cg.dim == k.algebra.dim);
        CHECK(casimir_scalar(cg) == casimir_scalar(k.algebra));
        CHECK(k.algebra.form == cg.form);

        const RootDatum& d = k.algebra.datum;
        for (const Root& ra : d.all_roots)
            for (const Root& rb : d.all_roots) {
                Vec sum = ra.v;
                for (size_t c = 0; c < sum.size(); ++c) sum[c] += rb.v[c];
                if (d.root_index(sum) < 0) continue;
                Vec na = ra.v, nb = rb.v;
                for (auto& c : na) c = -c;
                for (auto& c : nb) c = -c;
                RadicalScalar lhs =
                    structure_constant(k.algebra, ra.v, rb.v) * structure_constant(k.algebra, na, nb);
                RadicalScalar rhs = structure_constant(cg, ra.v, rb.v) * structure_constant(cg, na, nb);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("coefficient conjugation is an involution with a 17-dimensional real form") {
    for (Rational b : {Rational(0), Rational(3)}) {
        const K14Realization& k = k14_of(b);
        CHECK_NOTHROW(check_involution(k.algebra, k.phi));

        std::vector<SVec> fx = real_form_fixed_points(k.algebra, k.phi);
        REQUIRE(fx.size() == 17);
        for (const SVec& v : fx) CHECK(sv_equal(k.phi.apply(v), v));

        /* the listed real span: 1, xi_i, xi_i xi_j, t/2, a_i, and the
           highest root vector, all with real coefficients */
        std::vector<ContactElement> listed;
        listed.push_back(ContactElement::one());
        for (int i = 1; i <= 4; ++i) listed.push_back(ContactElement::xi(i));
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                listed.push_back(ContactElement::xi(i) * ContactElement::xi(j));
        listed.push_back(scaled(Rational(1, 2), ContactElement::t()));
        for (int i = 1; i <= 4; ++i) listed.push_back(k14_a(i, b));
        listed.push_back(k.e);
        REQUIRE(listed.size() == 17);

        /* coordinates of each listed element over the model basis */
        std::map<std::pair<int, unsigned>, int> keys;
        for (const ContactElement& el : k.elements)
            for (const auto& [key, c] : el.terms()) {
                (void)c;
                keys.emplace(key, 0);
            }
        int row = 0;
        for (auto& [key, pos] : keys) {
            (void)key;
            pos = row++;
        }
        Mat<RadicalScalar> cols(keys.size(), 17);
        for (int j = 0; j < 17; ++j)
            for (const auto& [key, c] : k.elements[j].terms()) cols.at(keys.at(key), j) = c;

        std::vector<SVec> stacked = fx;
        Mat<RadicalScalar> base = realified_rows(stacked, 17);
        REQUIRE(rank(base) == 17);
        for (const ContactElement& el : listed) {
            std::vector<RadicalScalar> amb(keys.size());
            for (const auto& [key, c] : el.terms()) amb[keys.at(key)] = c;
            std::vector<RadicalScalar> coords = solve_unique(cols, amb);
            SVec sv;
            for (int s = 0; s < 17; ++s)
                if (!coords[s].is_zero()) sv.emplace_back(s, coords[s]);
            stacked.push_back(sv);
            CHECK(rank(realified_rows(stacked, 17)) == 17);
            stacked.pop_back();
        }

        ConjugateLinearMap bad;
        bad.m = Mat<RadicalScalar>::identity(17);
        for (size_t i = 0; i < bad.m.rows; ++i) bad.m.at(i, i) = RadicalScalar(2);
        CHECK_THROWS_AS(real_form_fixed_points(k.algebra, bad), NotInvolution);

        ConjugateLinearMap plain;
        plain.m = Mat<RadicalScalar>::identity(17);
        CHECK(real_form_fixed_points(k.algebra, plain).size() == 17);
    }
}

TEST_CASE("real form fixed points across the catalog") {
    SuperLieAlgebra g3 = algebra_of(Family::G3);
    AlmostCompactData g3ac = almost_compact(g3);
    CHECK(real_form_fixed_points(g3ac.basis.alg, g3ac.phi).size() == 31);

    /* centralizer components of spo(2|m) stay inside the fixed points and
       carry a negative definite Killing form (a compact orthogonal algebra) */
    for (int m : {3, 4}) {
        SuperLieAlgebra alg = algebra_of(Family::SPO2m, m);
        AlmostCompactData ac = almost_compact(alg);
        std::vector<SVec> fx = real_form_fixed_points(ac.basis.alg, ac.phi);
        CHECK((int)fx.size() == alg.dim);

        GradedDecomposition grading = minimal_grading(ac.basis.alg, ac.triple);
        std::vector<Component> comps = component_split(ac.basis.alg, grading);
        int total = 0;
        for (const Component& comp : comps) {
            if (comp.is_center) continue;
            std::vector<SVec> rb = fixed_real_basis(ac.basis, comp);
            total += (int)rb.size();
            for (const SVec& v : rb) CHECK(sv_equal(ac.phi.apply(v), v));
            CHECK_NOTHROW(check_negative_definite(killing_matrix(ac.basis.alg, rb)));
        }
        CHECK(total == m * (m - 1) / 2);
    }
}

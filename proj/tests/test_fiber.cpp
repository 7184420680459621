#include <doctest.h>

#include <random>

#include "cubicgit/errors.hpp"
#include "cubicgit/fiber.hpp"
#include "cubicgit/selftest.hpp"

using namespace cubicgit;

namespace {

ContainmentFamily fermat_family() {
    return ContainmentFamily(selftest::fermat_fourfold_slice());
}

Polynomial member(const ContainmentFamily& fam, const std::string& f2,
                  const std::string& f1, long f0) {
    Polynomial y = fam.f3();
    Polynomial x0 = parse_poly("x0", 7);
    if (!f2.empty()) y = y + x0 * parse_poly(f2, 7);
    if (!f1.empty()) y = y + x0 * x0 * parse_poly(f1, 7);
    if (f0 != 0)
        y = y + Polynomial::single(7, Monomial::unit(7, 0, 3), Scalar::rational(f0));
    return y;
}

}  // namespace

TEST_CASE("family construction") {
    ContainmentFamily fam = fermat_family();
    CHECK(fam.w2_basis().size() == 15);
    CHECK(fam.quadric_basis().size() == 21);
    CHECK(rank(fam.partials_matrix()) == 6);
    // complement = all mixed monomials x_i x_j, i < j
    for (const Monomial& m : fam.w2_monomials()) {
        bool square = false;
        for (std::size_t v = 1; v < 7; ++v) square = square || m[v] == 2;
        CHECK_FALSE(square);
    }

    CHECK_THROWS_AS(ContainmentFamily(parse_poly("x1^3+x2^3+x3^3+x4^3+x5^3", 7)),
                    ConeDirection);
    try {
        ContainmentFamily bad(parse_poly("x1^3+x2^3+x3^3+x4^3+x5^3", 7));
    } catch (const ConeDirection& e) {
        CHECK(e.kernel == std::vector<long>{0, 0, 0, 0, 0, 1});
    }
    // f3 must not involve x0
    CHECK_THROWS_AS(ContainmentFamily(parse_poly("x0^3+x1^3", 7)), Error);

    // a random dense cubic in x1..x6 has independent partials
    std::mt19937_64 rng(53);
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (const Monomial& m : monomial_basis(7, 3)) {
        if (m[0] != 0) continue;
        terms.emplace_back(m, Scalar::rational(static_cast<long>(rng() % 17) - 8));
    }
    Polynomial f3 = Polynomial::from_terms(7, 3, FieldTag::Q(), std::move(terms));
    ContainmentFamily random_fam(f3);
    CHECK(random_fam.w2_basis().size() == 15);
}

TEST_CASE("decompose") {
    ContainmentFamily fam = fermat_family();

    Decomposition cone = decompose(fam, fam.f3());
    CHECK(cone.f2.is_zero());
    CHECK(cone.f1.is_zero());
    CHECK(cone.f0.is_zero());

    Decomposition d = decompose(fam, member(fam, "x1*x2", "", 1));
    CHECK(d.f2.str() == "x1*x2");
    CHECK(d.f1.is_zero());
    CHECK(d.f0 == Scalar::rational(1));

    // scaling is normalized away
    Polynomial y = fam.f3().scaled(Scalar::rational(2)) +
                   parse_poly("x0", 7) * parse_poly("x1^2", 7);
    Decomposition ds = decompose(fam, y);
    CHECK(ds.f2.str() == "1/2*x1^2");
    CHECK(ds.f1.is_zero());
    CHECK(ds.f0.is_zero());

    CHECK_THROWS_AS(decompose(fam, parse_poly("x1^3 + x0^3", 7)), NotInFamily);
    CHECK_THROWS_AS(decompose(fam, parse_poly("x0*x1^2 + x0^3", 7)), ContainsHyperplane);
}

TEST_CASE("Ga normalization") {
    ContainmentFamily fam = fermat_family();

    GaNormalization n1 = ga_normalize(fam, parse_poly("x1^2 + x1*x2", 7));
    CHECK(n1.a == std::vector<Rational>{Rational(-1, 3), 0, 0, 0, 0, 0});
    CHECK(n1.f2_normal.str() == "x1*x2");

    GaNormalization n2 = ga_normalize(fam, parse_poly("x1*x2", 7));
    CHECK(n2.a == std::vector<Rational>(6, Rational(0)));
    CHECK(n2.f2_normal.str() == "x1*x2");

    // the sum of all partials cancels exactly
    Polynomial sum = Polynomial::zero(7, 2, FieldTag::Q());
    for (std::size_t i = 1; i < 7; ++i) sum = sum + fam.f3().derivative(i);
    GaNormalization n3 = ga_normalize(fam, sum);
    CHECK(n3.a == std::vector<Rational>(6, Rational(-1)));
    CHECK(n3.f2_normal.is_zero());

    // projection: a second application moves nothing
    GaNormalization again = ga_normalize(fam, n1.f2_normal);
    CHECK(again.a == std::vector<Rational>(6, Rational(0)));
}

TEST_CASE("normal form") {
    ContainmentFamily fam = fermat_family();

    WeightedPoint p = normal_form(fam, member(fam, "x1*x2", "", 0));
    CHECK(p.c1[0] == 1);  // x1*x2 is the leading complement monomial
    for (std::size_t i = 1; i < 15; ++i) CHECK(p.c1[i] == 0);
    for (const auto& v : p.c2) CHECK(v == 0);
    CHECK(p.c3 == 0);

    CHECK_THROWS_AS(normal_form(fam, fam.f3()), ConeOrbit);

    // frozen output of the x0*x1^2 member, checked against the dense
    // expansion oracle in the substitution tests
    WeightedPoint q = normal_form(fam, member(fam, "x1^2", "", 0));
    for (const auto& v : q.c1) CHECK(v == 0);
    CHECK(q.c2 == std::vector<Rational>{Rational(-1, 3), 0, 0, 0, 0, 0});
    CHECK(q.c3 == Rational(2, 27));
}

TEST_CASE("group action") {
    ContainmentFamily fam = fermat_family();
    Polynomial y = member(fam, "x1^2 + x2*x3", "x4", 5);

    CHECK(group_act(GroupElement::identity(), y) == y);

    // the cone is fixed up to normalization
    GroupElement g{std::vector<Rational>{1, 0, -2, 0, 0, 0}, Rational(1)};
    CHECK_THROWS_AS(normal_form(fam, group_act(g, fam.f3())), ConeOrbit);

    // torus weights (t, t^2, t^3) on the normal-form coordinates
    WeightedPoint base = normal_form(fam, y);
    GroupElement gm{std::vector<Rational>(6, 0), Rational(2)};
    WeightedPoint scaled = normal_form(fam, group_act(gm, y));
    for (std::size_t i = 0; i < 15; ++i) CHECK(scaled.c1[i] == Rational(2) * base.c1[i]);
    for (std::size_t i = 0; i < 6; ++i) CHECK(scaled.c2[i] == Rational(4) * base.c2[i]);
    CHECK(scaled.c3 == Rational(8) * base.c3);
}

TEST_CASE("normal form is G-invariant") {
    std::mt19937_64 rng(59);
    ContainmentFamily fam = fermat_family();
    for (int i = 0; i < 15; ++i) {
        long c = static_cast<long>(rng() % 7) - 3;
        Polynomial y = member(fam, i % 2 ? "x1^2 + x3*x5" : "x2*x4", i % 3 ? "x6" : "",
                              c == 0 ? 1 : c);
        GroupElement g;
        g.a.assign(6, Rational(0));
        for (auto& a : g.a) a = Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 2);
        g.t = Rational(1 + static_cast<long>(rng() % 3), 1 + rng() % 2);
        WeightedPoint p = normal_form(fam, y);
        WeightedPoint q = normal_form(fam, group_act(g, y));
        CHECK(weighted_equal(p, q));
    }
}

TEST_CASE("weighted equality") {
    auto mk = [](std::vector<Rational> c1, std::vector<Rational> c2, Rational c3) {
        c1.resize(15);
        c2.resize(6);
        return WeightedPoint{std::move(c1), std::move(c2), std::move(c3)};
    };

    CHECK(weighted_equal(mk({1}, {}, 0), mk({2}, {}, 0)));
    CHECK(weighted_equal(mk({}, {}, 1), mk({}, {}, 8)));
    CHECK(weighted_equal(mk({1}, {1}, 0), mk({2}, {4}, 0)));
    CHECK_FALSE(weighted_equal(mk({1}, {1}, 0), mk({2}, {3}, 0)));
    CHECK_FALSE(weighted_equal(mk({1}, {}, 0), mk({}, {}, 1)));

    CHECK_THROWS_AS(weighted_equal(mk({}, {}, 0), mk({1}, {}, 0)), ZeroWeightedPoint);

    // only weight-2 coordinates: the closure orbit can hide a sign twist
    CHECK(mk({}, {1}, 0).torsion_ambiguous());
    CHECK_FALSE(mk({1}, {1}, 0).torsion_ambiguous());
    CHECK(mk({}, {}, 1).torsion_ambiguous());
}

TEST_CASE("separation sanity: distinct points stay distinct under the action") {
    std::mt19937_64 rng(61);
    ContainmentFamily fam = fermat_family();
    Polynomial y1 = member(fam, "x1*x2", "", 0);
    Polynomial y2 = member(fam, "x1*x3", "", 0);
    WeightedPoint p1 = normal_form(fam, y1);
    WeightedPoint p2 = normal_form(fam, y2);
    REQUIRE_FALSE(weighted_equal(p1, p2));
    for (int i = 0; i < 50; ++i) {
        GroupElement g;
        g.a.assign(6, Rational(0));
        for (auto& a : g.a) a = Rational(static_cast<long>(rng() % 9) - 4);
        g.t = Rational(1 + static_cast<long>(rng() % 4));
        CHECK_FALSE(weighted_equal(normal_form(fam, group_act(g, y1)), p2));
    }
}

#include <doctest.h>

#include <random>

#include "cubicgit/errors.hpp"
#include "cubicgit/hull.hpp"
#include "cubicgit/matrix.hpp"
#include "cubicgit/polynomial.hpp"

using namespace cubicgit;

namespace {

ExactMatrix mat_q(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Scalar>> s(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (long v : rows[i]) s[i].push_back(Scalar::rational(v));
    return ExactMatrix::from_rows(s);
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, FieldTag tag) {
    ExactMatrix m(r, c, tag);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, Scalar::of_int(static_cast<long>(rng() % 11) - 5, tag));
    return m;
}

// 6 x 21 matrix of the partial derivatives of the Fermat cubic fourfold in
// the degree-2 monomial basis of x1..x6 (7-variable context, x0-free slice).
ExactMatrix fermat_partials() {
    std::vector<Monomial> basis;
    for (const Monomial& m : monomial_basis(7, 2))
        if (m[0] == 0) basis.push_back(m);
    REQUIRE(basis.size() == 21);
    Polynomial f = parse_poly("x1^3+x2^3+x3^3+x4^3+x5^3+x6^3", 7);
    ExactMatrix out(6, 21, FieldTag::Q());
    for (std::size_t i = 1; i <= 6; ++i) {
        Polynomial g = f.derivative(i);
        for (std::size_t j = 0; j < 21; ++j) out.set(i - 1, j, g.coefficient(basis[j]));
    }
    return out;
}

}  // namespace

TEST_CASE("rank examples") {
    CHECK(rank(mat_q({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(ExactMatrix::identity(5)) == 5);
    CHECK(rank(ExactMatrix(3, 4)) == 0);
    CHECK(rank(fermat_partials()) == 6);
}

TEST_CASE("rank properties") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 15; ++i) {
        ExactMatrix a = random_matrix(rng, 3 + rng() % 3, 3 + rng() % 3, FieldTag::Q());
        CHECK(rank(a) == rank(a.transposed()));
    }
    // rank over Q bounds the rank of any mod-p reduction from above
    for (int i = 0; i < 15; ++i) {
        ExactMatrix a = random_matrix(rng, 4, 5, FieldTag::Q());
        ExactMatrix b(4, 5, FieldTag::Fp(5));
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 5; ++c)
                b.set(r, c, Scalar::residue(rational_mod_p(a.at(r, c).rat(), 5), 5));
        CHECK(rank(b) <= rank(a));
    }
}

TEST_CASE("kernel examples and properties") {
    auto k1 = kernel_basis(mat_q({{1, 1}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == std::vector<Integer>{1, -1});

    CHECK(kernel_basis(ExactMatrix::identity(3)).empty());

    auto k2 = kernel_basis(mat_q({{1, 2}, {2, 4}}));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == std::vector<Integer>{2, -1});

    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) {
        ExactMatrix a = random_matrix(rng, 3, 5, FieldTag::Q());
        auto kb = kernel_basis(a);
        CHECK(kb.size() == 5 - rank(a));
        for (const auto& v : kb) {
            for (std::size_t r = 0; r < a.rows(); ++r) {
                Rational dot = 0;
                for (std::size_t c = 0; c < a.cols(); ++c)
                    dot += a.at(r, c).rat() * Rational(v[c]);
                CHECK(dot == 0);
            }
            // content 1, positive leading entry
            Integer content = 0;
            for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
            CHECK(content == 1);
            for (const auto& x : v) {
                if (x != 0) { CHECK(x > 0); break; }
            }
        }
    }
}

TEST_CASE("complement basis") {
    // spanning set covers everything: empty complement
    CHECK(complement_basis({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}, 2)
              .empty());
    // empty set: all indices
    CHECK(complement_basis({}, 3) == std::vector<std::size_t>{0, 1, 2});

    // Fermat partials span the six squares; the greedy complement is exactly
    // the fifteen mixed products x_i x_j (i < j)
    ExactMatrix p = fermat_partials();
    std::vector<std::vector<Rational>> rows(6, std::vector<Rational>(21));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 21; ++j) rows[i][j] = p.at(i, j).rat();
    auto comp = complement_basis(rows, 21);
    CHECK(comp.size() == 15);
    std::vector<Monomial> basis;
    for (const Monomial& m : monomial_basis(7, 2))
        if (m[0] == 0) basis.push_back(m);
    for (std::size_t idx : comp) {
        bool square = false;
        for (std::size_t v = 1; v < 7; ++v) square = square || basis[idx][v] == 2;
        CHECK_FALSE(square);
    }

    // union of the span and the complement has full rank
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        ExactMatrix a = random_matrix(rng, 2, 4, FieldTag::Q());
        std::vector<std::vector<Rational>> s(2, std::vector<Rational>(4));
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 4; ++c) s[r][c] = a.at(r, c).rat();
        auto comp2 = complement_basis(s, 4);
        CHECK(comp2.size() == 4 - rank(a));
        ExactMatrix joint(2 + comp2.size(), 4, FieldTag::Q());
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 4; ++c) joint.set(r, c, a.at(r, c));
        for (std::size_t k = 0; k < comp2.size(); ++k)
            joint.set(2 + k, comp2[k], Scalar::rational(1));
        CHECK(rank(joint) == 4);
    }
}

TEST_CASE("solve") {
    ExactMatrix a = mat_q({{1, 2}, {3, 4}});
    auto x = solve(a, std::vector<Rational>{Rational(5), Rational(11)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 2);
    CHECK_FALSE(solve(mat_q({{1, 1}, {1, 1}}), std::vector<Rational>{Rational(0), Rational(1)})
                    .has_value());
}

TEST_CASE("hull membership examples") {
    std::vector<std::vector<Rational>> pts{{1, 0}, {0, 1}};
    std::vector<Rational> mid{Rational(1, 2), Rational(1, 2)};
    auto r = hull_membership(pts, mid);
    auto* in = std::get_if<InHull>(&r);
    REQUIRE(in != nullptr);
    CHECK(in->coefficients == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(verify_in_hull(pts, mid, in->coefficients));

    std::vector<Rational> outside{2, -1};
    auto s = hull_membership(pts, outside);
    auto* sep = std::get_if<Separated>(&s);
    REQUIRE(sep != nullptr);
    CHECK(verify_separated(pts, outside, sep->functional));

    std::vector<std::vector<Rational>> single{{3, 4}};
    auto t = hull_membership(single, {Rational(3), Rational(4)});
    auto* in2 = std::get_if<InHull>(&t);
    REQUIRE(in2 != nullptr);
    CHECK(in2->coefficients == std::vector<Rational>{1});

    CHECK_THROWS_AS(hull_membership({}, {Rational(0)}), DimensionMismatch);
    CHECK_THROWS_AS(hull_membership({{Rational(0), Rational(1)}}, {Rational(0)}),
                    DimensionMismatch);
}

TEST_CASE("hull certificates re-verify on random instances") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 150; ++i) {
        std::size_t d = 2 + rng() % 3;
        std::size_t n = 1 + rng() % 8;
        std::vector<std::vector<Rational>> pts(n, std::vector<Rational>(d));
        for (auto& p : pts)
            for (auto& v : p) v = Rational(static_cast<long>(rng() % 9) - 4);
        std::vector<Rational> target(d);
        for (auto& v : target) {
            v = Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
            v.canonicalize();
        }
        auto r = hull_membership(pts, target);
        if (auto* in = std::get_if<InHull>(&r)) {
            CHECK(verify_in_hull(pts, target, in->coefficients));
            // the interior refinement stays feasible and bounded
            Rational delta = hull_min_coefficient(pts, target);
            CHECK(delta >= 0);
            CHECK(delta * static_cast<long>(n) <= 1);
        } else {
            CHECK(verify_separated(pts, target, std::get<Separated>(r).functional));
        }
    }
}

TEST_CASE("pivot budget is a hard failure") {
    std::vector<std::vector<Rational>> pts{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    std::vector<Rational> target{Rational(1, 2), Rational(1, 2)};
    CHECK_THROWS_AS(hull_membership(pts, target, LpOptions{1}), PivotBudgetExceeded);
}

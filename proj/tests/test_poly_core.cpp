#include <doctest.h>

#include <map>
#include <random>

#include "cubicgit/errors.hpp"
#include "cubicgit/matrix.hpp"
#include "cubicgit/polynomial.hpp"

using namespace cubicgit;

namespace {

Polynomial random_poly(std::mt19937_64& rng, std::size_t n_vars, std::uint32_t degree,
                       FieldTag tag, int max_terms = 6) {
    auto basis = monomial_basis(n_vars, degree);
    std::shuffle(basis.begin(), basis.end(), rng);
    std::size_t count = 1 + rng() % static_cast<std::size_t>(max_terms);
    count = std::min(count, basis.size());
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (std::size_t i = 0; i < count; ++i) {
        long c = static_cast<long>(rng() % 19) - 9;
        if (c == 0) c = 1;
        terms.emplace_back(basis[i], Scalar::of_int(c, tag));
    }
    return Polynomial::from_terms(n_vars, degree, tag, std::move(terms));
}

}  // namespace

TEST_CASE("scalar arithmetic and field tags") {
    Scalar a = Scalar::rational(Rational(2, 4));
    CHECK(a.rat() == Rational(1, 2));
    CHECK(rational_str(a.rat()) == "1/2");

    Scalar b = Scalar::residue(9, 7);
    CHECK(b.residue_value() == 2);
    CHECK((b.inverse() * b).is_one());
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(Scalar::rational(1) / Scalar::rational(0), DivisionByZero);

    CHECK_THROWS_AS(FieldTag::Fp(4), Error);
    CHECK_THROWS_AS(FieldTag::Fp(2), Error);
    CHECK(FieldTag::Fp(3).p == 3);
    // the smoothness witness primes really are primes
    for (std::uint32_t p : {10007u, 20011u, 30011u}) CHECK(is_prime_u32(p));
}

TEST_CASE("monomial order and bases") {
    CHECK(monomial_basis(6, 2).size() == 21);
    CHECK(monomial_basis(7, 3).size() == 84);
    CHECK(monomial_basis(7, 0).size() == 1);

    // graded order, largest first, x0 dominant
    auto basis = monomial_basis(3, 2);
    CHECK(basis.front() == Monomial({2, 0, 0}));
    CHECK(basis.back() == Monomial({0, 0, 2}));
    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
        CHECK(grlex_cmp(basis[i], basis[i + 1]) > 0);
}

TEST_CASE("parser accepts the grammar") {
    Polynomial f = parse_poly("x1^3 + x2^3", 7);
    CHECK(f.degree() == 3);
    CHECK(f.term_count() == 2);

    Polynomial h = parse_poly("x0", 7);
    CHECK(h.degree() == 1);
    CHECK(h.str() == "x0");

    CHECK(parse_poly("2*x1*x2 - 3*x0^2", 3).term_count() == 2);
    CHECK(parse_poly("1/2*x1^2 + x0*x1", 2).coefficient(Monomial({0, 2})) ==
          Scalar::rational(Rational(1, 2)));
    CHECK(parse_poly(" x0 * x1 ^ 2 ", 2).degree() == 3);
    CHECK(parse_poly("x1 - x1", 3).is_zero());
    CHECK(parse_poly("-x1 + x2", 3).coefficient(Monomial({0, 1, 0})) ==
          Scalar::rational(-1));
}

TEST_CASE("parser rejects bad input") {
    CHECK_THROWS_AS(parse_poly("x1^2 + x1", 7), InhomogeneousError);
    try {
        parse_poly("x1^2 + x1", 7);
    } catch (const InhomogeneousError& e) {
        CHECK(e.deg_a == 2);
        CHECK(e.deg_b == 1);
    }
    CHECK_THROWS_AS(parse_poly("x9", 7), UnknownVariable);
    CHECK_THROWS_AS(parse_poly("x1 +", 7), SyntaxError);
    CHECK_THROWS_AS(parse_poly("", 7), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x1 * * x2", 7), SyntaxError);
    CHECK_THROWS_AS(parse_poly("1/0", 7), SyntaxError);
}

TEST_CASE("parser survives arbitrary input") {
    std::mt19937_64 rng(71);
    const char alphabet[] = "x0123456789+-*/^ ()ab";
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        std::size_t len = rng() % 16;
        for (std::size_t j = 0; j < len; ++j)
            s += alphabet[rng() % (sizeof(alphabet) - 1)];
        try {
            Polynomial f = parse_poly(s, 4);
            CHECK(parse_poly(f.str(), 4) == f);
        } catch (const Error&) {
            // rejected input is fine; crashing is not
        }
    }
}

TEST_CASE("canonical formatting") {
    CHECK(parse_poly("x2^3 + x1^3", 7).str() == "x1^3 + x2^3");
    CHECK(parse_poly("x1*x1", 3).str() == "x1^2");
    CHECK(parse_poly("-1*x1 + 2*x0", 2).str() == "2*x0 - x1");
    CHECK(parse_poly("3", 2).str() == "3");
    CHECK(parse_poly("0", 2).str() == "0");
    CHECK(parse_poly("1/2*x0*x1", 2).str() == "1/2*x0*x1");
}

TEST_CASE("format/parse round trip on random polynomials") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        FieldTag tag = (i % 2) ? FieldTag::Fp(10007) : FieldTag::Q();
        Polynomial f = random_poly(rng, 4, 1 + i % 4, tag);
        Polynomial g = parse_poly(f.str(), 4, tag);
        CHECK(f == g);
        CHECK(g.str() == f.str());
    }
}

TEST_CASE("derivative examples") {
    CHECK(partial_derivative(parse_poly("x1^3", 7), 1).str() == "3*x1^2");
    Polynomial cone = parse_poly("x1^3+x2^3+x3^3+x4^3+x5^3", 6);
    CHECK(partial_derivative(cone, 0).is_zero());
    CHECK(partial_derivative(parse_poly("x1*x2*x3", 7), 1).str() == "x2*x3");
}

TEST_CASE("Euler identity") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        std::uint32_t d = 1 + i % 4;
        Polynomial f = random_poly(rng, 4, d, FieldTag::Q());
        Polynomial sum = Polynomial::zero(4, d, FieldTag::Q());
        for (std::size_t v = 0; v < 4; ++v) {
            Polynomial dv = f.derivative(v);
            if (dv.is_zero()) continue;
            Polynomial xv = Polynomial::single(4, Monomial::unit(4, v), Scalar::rational(1));
            sum = sum + xv * dv;
        }
        CHECK(sum == f.scaled(Scalar::rational(static_cast<long>(d))));
    }
}

namespace {

// Independent dense expansion: substitute each variable by a linear form and
// multiply out with a plain map, sharing nothing with Polynomial internals.
using DenseMap = std::map<std::vector<int>, Rational>;

DenseMap dense_mul(const DenseMap& a, const DenseMap& b, std::size_t n) {
    DenseMap out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            std::vector<int> m(n);
            for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    }
    return out;
}

DenseMap dense_substitute(const Polynomial& f,
                          const std::vector<std::vector<Rational>>& forms) {
    const std::size_t n = f.n_vars();
    DenseMap acc;
    for (const auto& [mono, c] : f.terms()) {
        DenseMap term{{std::vector<int>(n, 0), c.rat()}};
        for (std::size_t v = 0; v < n; ++v) {
            DenseMap lin;
            for (std::size_t j = 0; j < n; ++j) {
                if (forms[v][j] == 0) continue;
                std::vector<int> m(n, 0);
                m[j] = 1;
                lin[m] = forms[v][j];
            }
            for (std::uint32_t e = 0; e < mono[v]; ++e) term = dense_mul(term, lin, n);
        }
        for (const auto& [m, cc] : term) acc[m] += cc;
    }
    return acc;
}

}  // namespace

TEST_CASE("linear substitution") {
    FieldTag q = FieldTag::Q();
    Polynomial f = parse_poly("x1^2", 7);
    CHECK(f.substitute_linear(ExactMatrix::identity(7, q)) == f);

    // x1 -> x1 + x0
    ExactMatrix shear = ExactMatrix::identity(7, q);
    shear.set(0, 1, Scalar::rational(1));
    CHECK(f.substitute_linear(shear).str() == "x0^2 + 2*x0*x1 + x1^2");

    // Fermat cubic in x1..x6, x1 -> x1 - (1/3) x0: coefficient of x0*x1^2
    Polynomial fermat = parse_poly("x1^3+x2^3+x3^3+x4^3+x5^3+x6^3", 7);
    ExactMatrix mv = ExactMatrix::identity(7, q);
    mv.set(0, 1, Scalar::rational(Rational(-1, 3)));
    Polynomial shifted = fermat.substitute_linear(mv);
    Monomial x0x1sq({1, 2, 0, 0, 0, 0, 0});
    CHECK(shifted.coefficient(x0x1sq) == Scalar::rational(-1));

    // against the independent dense expansion
    std::vector<std::vector<Rational>> forms(7, std::vector<Rational>(7, 0));
    for (std::size_t i = 0; i < 7; ++i) forms[i][i] = 1;
    forms[1][0] = Rational(-1, 3);
    DenseMap expect = dense_substitute(fermat, forms);
    for (const auto& [m, c] : expect) {
        if (c == 0) continue;
        std::vector<std::uint32_t> exps(m.begin(), m.end());
        CHECK(shifted.coefficient(Monomial(exps)).rat() == c);
    }
    CHECK(shifted.term_count() ==
          static_cast<std::size_t>(std::count_if(expect.begin(), expect.end(),
                                                 [](auto& kv) { return kv.second != 0; })));

    CHECK_THROWS_AS(f.substitute_linear(ExactMatrix(7, 7, q)), SingularSubstitution);
}

TEST_CASE("substitution composition law") {
    std::mt19937_64 rng(123);
    FieldTag q = FieldTag::Q();
    Polynomial f = random_poly(rng, 3, 2, q);
    ExactMatrix m = ExactMatrix::identity(3, q);
    m.set(0, 1, Scalar::rational(2));
    m.set(2, 0, Scalar::rational(-1));
    ExactMatrix n = ExactMatrix::identity(3, q);
    n.set(1, 2, Scalar::rational(Rational(1, 2)));
    CHECK(f.substitute_linear(m * n) == f.substitute_linear(n).substitute_linear(m));
}

TEST_CASE("reduction to prime fields") {
    CHECK(reduce_mod_p(parse_poly("3*x1^2", 7), 3).is_zero());
    Polynomial r = reduce_mod_p(parse_poly("1/2*x1^3", 7), 7);
    CHECK(r.coefficient(Monomial::unit(7, 1, 3)).residue_value() == 4);
    CHECK_THROWS_AS(reduce_mod_p(parse_poly("1/3*x1^3", 7), 3), BadPrime);

    // ring homomorphism on random instances
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        Polynomial a = random_poly(rng, 3, 2, FieldTag::Q());
        Polynomial b = random_poly(rng, 3, 2, FieldTag::Q());
        CHECK(reduce_mod_p(a * b, 101) == reduce_mod_p(a, 101) * reduce_mod_p(b, 101));
        CHECK(reduce_mod_p(a + b, 101) == reduce_mod_p(a, 101) + reduce_mod_p(b, 101));
    }
}

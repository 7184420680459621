#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cubicgit/monomial.hpp"
#include "cubicgit/scalar.hpp"

namespace cubicgit {

class ExactMatrix;

// Sparse homogeneous polynomial with exact coefficients. Immutable after
// construction: no stored zero coefficients, all monomials of equal total
// degree, one field tag. Terms iterate leading-first in the graded order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, GrlexGreater>;

    static Polynomial zero(std::size_t n_vars, std::uint32_t degree,
                           FieldTag tag = FieldTag::Q());
    // Consolidates duplicates, drops zeros, checks homogeneity and tags.
    static Polynomial from_terms(std::size_t n_vars, std::uint32_t degree, FieldTag tag,
                                 std::vector<std::pair<Monomial, Scalar>> terms);
    static Polynomial single(std::size_t n_vars, Monomial m, Scalar c);

    std::size_t n_vars() const { return n_vars_; }
    std::uint32_t degree() const { return degree_; }
    const FieldTag& tag() const { return tag_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Zero scalar when the monomial is absent.
    Scalar coefficient(const Monomial& m) const;
    // Leading (grlex-greatest) term; throws ZeroPolynomial when zero.
    const std::pair<const Monomial, Scalar>& leading_term() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;

    Polynomial pow(std::uint32_t e) const;

    // Formal partial derivative; degree drops by one (stays 0 at degree 0).
    Polynomial derivative(std::size_t var) const;

    // f(M x) with the substitution x_i -> sum_j M[j][i] x_j, so that
    // substitute(substitute(f, N), M) == substitute(f, M * N).
    // Throws SingularSubstitution when rank(M) < n_vars.
    Polynomial substitute_linear(const ExactMatrix& m) const;

    // Coefficient-wise reduction of a rational polynomial mod p.
    Polynomial reduce_mod_p(std::uint32_t p) const;

    Scalar evaluate(std::span<const Scalar> point) const;

    // Canonical form: graded order, explicit '*', '^' only for exponents >= 2,
    // coefficient 1 elided except on the constant monomial.
    std::string str() const;

private:
    Polynomial(std::size_t n_vars, std::uint32_t degree, FieldTag tag)
        : n_vars_(n_vars), degree_(degree), tag_(tag) {}

    std::size_t n_vars_{0};
    std::uint32_t degree_{0};
    FieldTag tag_{};
    TermMap terms_;
};

Polynomial partial_derivative(const Polynomial& f, std::size_t var);
Polynomial substitute_linear(const Polynomial& f, const ExactMatrix& m);
Polynomial reduce_mod_p(const Polynomial& f, std::uint32_t p);

// Parses the ASCII polynomial grammar:
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)?
//   var    := 'x' uint
//   coeff  := int | int '/' uint
// Whitespace is ignored; '-' binds to the following term's coefficient.
Polynomial parse_poly(const std::string& text, std::size_t n_vars,
                      FieldTag tag = FieldTag::Q());

}  // namespace cubicgit

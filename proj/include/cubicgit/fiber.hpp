#pragma once

#include <cstdint>
#include <vector>

#include "cubicgit/matrix.hpp"
#include "cubicgit/polynomial.hpp"

namespace cubicgit {

// Cubic fivefolds through a fixed cubic fourfold X = V(f3) in the hyperplane
// x0 = 0: the family f3 + f2 x0 + f1 x0^2 + f0 x0^3, acted on by the
// stabilizer of the hyperplane.
class ContainmentFamily {
public:
    // f3: a cubic in x1..x6 inside the 7-variable context (no x0). Computes
    // the 6 x 21 partials matrix, checks the free-action rank condition, and
    // fixes the monomial complement basis of dimension 15.
    // Throws ConeDirection when the partials are dependent.
    explicit ContainmentFamily(Polynomial f3);

    const Polynomial& f3() const { return f3_; }
    std::size_t n_vars() const { return f3_.n_vars(); }

    // Degree-2 monomials in x1..x6 (x0-free), grlex order; length 21.
    const std::vector<Monomial>& quadric_basis() const { return quadric_basis_; }
    // Rows 0..5 are the partials df3/dx_i (i = 1..6) in that basis.
    const ExactMatrix& partials_matrix() const { return partials_; }
    // Indices into quadric_basis() of the 15 complement monomials.
    const std::vector<std::size_t>& w2_basis() const { return w2_; }

    std::vector<Monomial> w2_monomials() const;

private:
    Polynomial f3_;
    std::vector<Monomial> quadric_basis_;
    ExactMatrix partials_{0, 0};
    std::vector<std::size_t> w2_;
};

// (f2, f1, f0) with Y = f3 + f2 x0 + f1 x0^2 + f0 x0^3 after normalizing the
// f3-coefficient to 1.
struct Decomposition {
    Polynomial f2;  // degree 2 in x1..x6 (possibly zero)
    Polynomial f1;  // degree 1 in x1..x6 (possibly zero)
    Scalar f0;
};

// Throws NotInFamily / ContainsHyperplane.
Decomposition decompose(const ContainmentFamily& family, const Polynomial& y);

// The additive part a = (a_1..a_6) and the multiplicative scale t != 0 of the
// hyperplane stabilizer.
struct GroupElement {
    std::vector<Rational> a;  // length 6
    Rational t;

    static GroupElement identity();
};

// Substitution x_i -> x_i + a_i x0 followed by x0 -> t x0.
Polynomial group_act(const GroupElement& g, const Polynomial& y);

// The unique translation a with f2 + sum a_i df3/dx_i in span(W2).
struct GaNormalization {
    std::vector<Rational> a;
    Polynomial f2_normal;
};
GaNormalization ga_normalize(const ContainmentFamily& family, const Polynomial& f2);

// A point of the weight-(1^15, 2^6, 3) quotient: W2-coordinates of f2, the
// coefficients of f1, and f0. Never the zero vector.
struct WeightedPoint {
    std::vector<Rational> c1;  // length 15, weight 1
    std::vector<Rational> c2;  // length 6, weight 2
    Rational c3;               // weight 3

    bool is_zero() const;
    // gcd of the weights over the nonzero coordinates exceeds 1: closure
    // equality can then hide a root-of-unity twist over Q.
    bool torsion_ambiguous() const;
};

// Full normal form: decompose, translate f2 into W2, and read off the
// coordinates. Throws ConeOrbit for the cone itself.
WeightedPoint normal_form(const ContainmentFamily& family, const Polynomial& y);

// Equality in the weighted projective space over the algebraic closure,
// decided by vanishing patterns and the cross invariants
// p_i^{w_j} q_j^{w_i} = q_i^{w_j} p_j^{w_i}.
bool weighted_equal(const WeightedPoint& p, const WeightedPoint& q);

}  // namespace cubicgit

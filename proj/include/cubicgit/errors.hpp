#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicgit {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- input / parsing -------------------------------------------------------

struct SyntaxError : Error {
    std::size_t position;
    std::string expected;
    SyntaxError(std::size_t pos, std::string exp)
        : Error("syntax error at position " + std::to_string(pos) + ": expected " + exp),
          position(pos),
          expected(std::move(exp)) {}
};

struct InhomogeneousError : Error {
    unsigned deg_a, deg_b;
    InhomogeneousError(unsigned a, unsigned b)
        : Error("inhomogeneous polynomial: terms of degree " + std::to_string(a) +
                " and " + std::to_string(b)),
          deg_a(a),
          deg_b(b) {}
};

struct UnknownVariable : Error {
    std::string name;
    explicit UnknownVariable(std::string n)
        : Error("unknown variable " + n), name(std::move(n)) {}
};

// ---- scalars / fields ------------------------------------------------------

struct FieldMismatch : Error {
    FieldMismatch() : Error("mixing scalars with different field tags") {}
};

struct BadPrime : Error {
    std::uint32_t p;
    std::string coefficient;
    BadPrime(std::uint32_t prime, std::string coeff)
        : Error("cannot reduce coefficient " + coeff + " modulo " + std::to_string(prime)),
          p(prime),
          coefficient(std::move(coeff)) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("scalar division by zero") {}
};

// ---- linear algebra --------------------------------------------------------

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what)
        : Error("dimension mismatch: " + what) {}
};

struct SingularSubstitution : Error {
    SingularSubstitution() : Error("substitution matrix is singular") {}
};

struct PivotBudgetExceeded : Error {
    std::size_t budget;
    explicit PivotBudgetExceeded(std::size_t b)
        : Error("simplex pivot budget exceeded (" + std::to_string(b) + ")"), budget(b) {}
};

// ---- stability / walls -----------------------------------------------------

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct EmptyCandidates : Error {
    EmptyCandidates() : Error("no usable one-parameter subgroup candidates") {}
};

// ---- jacobian ring ---------------------------------------------------------

struct DegreeTooSmall : Error {
    DegreeTooSmall() : Error("polynomial degree must be at least 2") {}
};

struct NotSmooth : Error {
    NotSmooth() : Error("hypersurface is not smooth") {}
};

struct EvenDimension : Error {
    EvenDimension() : Error("hypersurface dimension must be odd") {}
};

struct ZeroPoint : Error {
    ZeroPoint() : Error("projective point must have a nonzero coordinate") {}
};

// ---- moduli fiber ----------------------------------------------------------

struct NotInFamily : Error {
    NotInFamily() : Error("restriction to x0 = 0 is not proportional to the fixed cubic") {}
};

struct ContainsHyperplane : Error {
    ContainsHyperplane() : Error("cubic contains the hyperplane x0 = 0") {}
};

struct ConeDirection : Error {
    // Content-reduced integer kernel vector a with sum_i a_i * df3/dx_i = 0.
    std::vector<long> kernel;
    explicit ConeDirection(std::vector<long> k)
        : Error("partial derivatives are linearly dependent (cone direction)"),
          kernel(std::move(k)) {}
};

struct ConeOrbit : Error {
    ConeOrbit() : Error("cubic lies in the group orbit of the cone") {}
};

struct ZeroWeightedPoint : Error {
    ZeroWeightedPoint() : Error("weighted point must be nonzero") {}
};

}  // namespace cubicgit

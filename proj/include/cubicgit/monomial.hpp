#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubicgit {

// Exponent vector of fixed length. Total degree = sum of entries.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}
    static Monomial unit(std::size_t n_vars, std::size_t i, std::uint32_t exp = 1);

    std::size_t n_vars() const { return e_.size(); }
    std::uint32_t degree() const;
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> e_;
};

// Graded order with x0 > x1 > ...: compare total degree first, then the
// exponent vectors lexicographically. The single order used everywhere for
// deterministic output (bases, formatting, complements).
int grlex_cmp(const Monomial& a, const Monomial& b);

// Leading (largest) monomial first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_cmp(a, b) > 0;
    }
};

// All monomials of the given total degree, largest first in the graded order.
// Length C(n_vars + degree - 1, degree).
std::vector<Monomial> monomial_basis(std::size_t n_vars, std::uint32_t degree);

unsigned long long binomial(unsigned n, unsigned k);

}  // namespace cubicgit

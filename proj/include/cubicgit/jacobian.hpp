#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cubicgit/polynomial.hpp"

namespace cubicgit {

// Escalation list for prime-field smoothness witnesses. Full rank mod p
// certifies full rank over Q, so a witness is sound; a miss is undecided and
// falls through to the exact path.
inline constexpr std::array<std::uint32_t, 3> kWitnessPrimes{10007, 20011, 30011};

// dim of the degree-k piece of C[x] / (df/dx_0, ..., df/dx_{n-1}), computed
// as dim Sym^k minus the rank of the multiplication matrix
// Sym^{k-(d-1)} (x) (partials) -> Sym^k over the polynomial's field.
unsigned long graded_dim(const Polynomial& f, std::uint32_t k);

// n_vars * (d - 2): top nonzero degree of the Jacobian ring when smooth.
std::uint32_t socle_degree(const Polynomial& f);

struct SmoothnessResult {
    bool smooth;
    // Present when smoothness was certified by full rank modulo a prime.
    std::optional<std::uint32_t> witness_p;
    // True when the verdict came from elimination over the polynomial's own
    // field rather than a mod-p witness.
    bool exact;
};

// Artinian criterion: smooth iff graded_dim(f, socle + 1) = 0. The witness
// list can be overridden; primes dividing a coefficient denominator are
// skipped.
SmoothnessResult is_smooth(const Polynomial& f);
SmoothnessResult is_smooth(const Polynomial& f,
                           std::span<const std::uint32_t> witness_primes);

// Primitive Hodge number h^{n-p,p}(X) for X = V(f) of dimension
// n = n_vars - 2, via the residue identification with the Jacobian ring in
// degree (p+1) d - n_vars. Throws NotSmooth.
unsigned long hodge_primitive(const Polynomial& f, std::uint32_t p);

// Half the middle Betti number of an odd-dimensional smooth hypersurface:
// the dimension of its intermediate Jacobian.
unsigned long intermediate_jacobian_dim(const Polynomial& f);

// Rank of the multiplication pairing R^a x R^{sigma-a} -> R^sigma in the
// monomial complement bases; equals dim R^a for smooth f.
unsigned long gorenstein_pairing_rank(const Polynomial& f, std::uint32_t a);

enum class PointClass { not_on_hypersurface, smooth_point, node, degenerate };

struct SingularityClass {
    PointClass kind;
    std::size_t hessian_rank{0};  // affine Hessian rank; meaningful for
                                  // node / degenerate
    const char* name() const;
};

// Classifies a rational projective point: gradient test, then the rank of
// the affine Hessian at the first nonzero coordinate chart.
SingularityClass classify_point(const Polynomial& f, const std::vector<Rational>& pt);

struct JacobianSummary {
    std::size_t n_vars;
    std::uint32_t degree;
    std::uint32_t k_lo, k_hi;
    std::vector<unsigned long> dims;  // R^k for k in [k_lo, k_hi]
    std::optional<SmoothnessResult> smooth;
    std::optional<std::uint32_t> socle;  // set when smooth
};

JacobianSummary jacobian_summary(const Polynomial& f, std::uint32_t k_lo, std::uint32_t k_hi,
                                 bool with_smoothness = false);

}  // namespace cubicgit

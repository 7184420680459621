#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cubicgit/hull.hpp"
#include "cubicgit/matrix.hpp"
#include "cubicgit/polynomial.hpp"

namespace cubicgit {

// Diagonal one-parameter subgroup: integer weights summing to zero, stored
// content-reduced. lambda and -lambda are distinct certificates, so the sign
// is kept as given.
struct OnePS {
    std::vector<long> weights;

    static OnePS of(std::vector<long> w);
    static OnePS trivial(std::size_t n_vars);
    bool is_trivial() const;
    std::size_t size() const { return weights.size(); }
    OnePS negated() const;

    friend bool operator==(const OnePS&, const OnePS&) = default;
};

// Extremal weight of the induced action: max over supp(f) of <w, m>.
long mu(const Polynomial& f, std::span<const long> w);
long mu(const Polynomial& f, const OnePS& lambda);

// A (hypersurface, hyperplane) pair with an exact slope t >= 0.
struct PairConfig {
    Polynomial Y;
    Polynomial H;
    Rational t;

    PairConfig(Polynomial y, Polynomial h, Rational slope);
    std::size_t n_vars() const { return Y.n_vars(); }
    PairConfig with_slope(Rational slope) const { return {Y, H, slope}; }
};

Rational mu_pair(const PairConfig& pair, std::span<const long> w);
Rational mu_pair(const PairConfig& pair, const OnePS& lambda);

enum class TorusStatus { stable, strictly_semistable, unstable };
const char* status_name(TorusStatus s);

// Torus verdict with an exact certificate. For the semistable statuses the
// certificate is a convex combination of `points` reproducing `target`; for
// unstable it is a destabilizing one-parameter subgroup.
struct StabilityVerdict {
    TorusStatus status;
    std::vector<std::vector<Rational>> points;
    std::vector<Rational> target;
    std::vector<Rational> hull_coefficients;  // semistable statuses
    std::optional<OnePS> destabilizer;        // unstable

    bool verify(const PairConfig& pair) const;
};

// Decides "mu_pair(pair, lambda) >= 0 for all zero-sum lambda" (and the
// strict form for stability) for the standard maximal torus: the barycenter
// must lie inside the convex hull of {m + t e_i}.
StabilityVerdict is_torus_semistable(const PairConfig& pair, const LpOptions& opts = {});

// Sub-polynomial of monomials attaining the maximal weight.
Polynomial initial_form(const Polynomial& f, std::span<const long> w);

// Pair of initial forms; calibrated so (-6,1,...,1) sends
// f3 + x0 f2 + x0^2 f1 + x0^3 f0 to f3.
PairConfig limit_pair(const PairConfig& pair, const OnePS& lambda);

struct DestabilizerHit {
    ExactMatrix move;
    OnePS lambda;
};

// Tries each coordinate change and returns the first torus-destabilized
// transform. Full SL-instability is only semi-decided this way.
std::optional<DestabilizerHit> destabilizer_search(const PairConfig& pair,
                                                   const std::vector<ExactMatrix>& moves,
                                                   const LpOptions& opts = {});

// Identity, a transposition when H is a coordinate hyperplane other than x0,
// and a Gaussian move sending H to x0 in general.
std::vector<ExactMatrix> default_basis_changes(const PairConfig& pair);

}  // namespace cubicgit

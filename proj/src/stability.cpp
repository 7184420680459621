#include "cubicgit/stability.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cubicgit/errors.hpp"

namespace cubicgit {

OnePS OnePS::of(std::vector<long> w) {
    long sum = std::accumulate(w.begin(), w.end(), 0L);
    if (sum != 0) throw Error("one-parameter subgroup weights must sum to zero");
    unsigned long g = 0;
    for (long v : w) g = std::gcd(g, static_cast<unsigned long>(v < 0 ? -v : v));
    if (g > 1)
        for (long& v : w) v /= static_cast<long>(g);
    return OnePS{std::move(w)};
}

OnePS OnePS::trivial(std::size_t n_vars) { return OnePS{std::vector<long>(n_vars, 0)}; }

bool OnePS::is_trivial() const {
    return std::all_of(weights.begin(), weights.end(), [](long v) { return v == 0; });
}

OnePS OnePS::negated() const {
    OnePS r = *this;
    for (long& v : r.weights) v = -v;
    return r;
}

long mu(const Polynomial& f, std::span<const long> w) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (w.size() != f.n_vars()) throw DimensionMismatch("weight vector length");
    bool first = true;
    long best = 0;
    for (const auto& [m, c] : f.terms()) {
        long dot = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            dot += w[i] * static_cast<long>(m[i]);
        if (first || dot > best) best = dot;
        first = false;
    }
    return best;
}

long mu(const Polynomial& f, const OnePS& lambda) { return mu(f, lambda.weights); }

PairConfig::PairConfig(Polynomial y, Polynomial h, Rational slope)
    : Y(std::move(y)), H(std::move(h)), t(std::move(slope)) {
    if (Y.is_zero() || H.is_zero()) throw ZeroPolynomial();
    if (Y.n_vars() != H.n_vars()) throw DimensionMismatch("pair n_vars");
    if (!(Y.tag() == H.tag())) throw FieldMismatch();
    if (H.degree() != 1) throw Error("H must be a nonzero linear form");
    t.canonicalize();
    if (t < 0) throw Error("the slope t must be non-negative");
}

Rational mu_pair(const PairConfig& pair, std::span<const long> w) {
    Rational r = mu(pair.Y, w);
    r += pair.t * mu(pair.H, w);
    return r;
}

Rational mu_pair(const PairConfig& pair, const OnePS& lambda) {
    return mu_pair(pair, std::span<const long>(lambda.weights));
}

const char* status_name(TorusStatus s) {
    switch (s) {
        case TorusStatus::stable: return "TorusStable";
        case TorusStatus::strictly_semistable: return "TorusStrictlySemistable";
        case TorusStatus::unstable: return "TorusUnstable";
    }
    return "?";
}

namespace {

// Weight polytope of the pair: one point m + t e_i per (monomial of Y,
// monomial x_i of H), deduplicated.
std::vector<std::vector<Rational>> pair_points(const PairConfig& pair) {
    const std::size_t n = pair.n_vars();
    std::set<std::vector<Rational>> seen;
    for (const auto& [m, cy] : pair.Y.terms()) {
        for (const auto& [h, ch] : pair.H.terms()) {
            std::size_t i = 0;
            while (h[i] == 0) ++i;
            std::vector<Rational> p(n);
            for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<long>(m[k]);
            p[i] += pair.t;
            seen.insert(std::move(p));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Rational> pair_target(const PairConfig& pair) {
    Rational v = (Rational(pair.Y.degree()) + pair.t) / Rational(static_cast<long>(pair.n_vars()));
    return std::vector<Rational>(pair.n_vars(), v);
}

// Projects a separating functional into the zero-sum lattice and reduces the
// content. The all-ones component is invisible to the weight polytope, which
// lives in a constant-coordinate-sum hyperplane.
OnePS integral_destabilizer(const std::vector<Rational>& functional) {
    const std::size_t n = functional.size();
    Rational mean = 0;
    for (const auto& v : functional) mean += v;
    mean /= static_cast<long>(n);
    Integer lcm = 1;
    std::vector<Rational> proj(n);
    for (std::size_t i = 0; i < n; ++i) {
        proj[i] = functional[i] - mean;
        proj[i].canonicalize();
        if (proj[i] != 0)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), proj[i].get_den().get_mpz_t());
    }
    std::vector<long> w(n);
    Integer content = 0;
    std::vector<Integer> scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
        scaled[i] = proj[i].get_num() * (lcm / proj[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled[i].get_mpz_t());
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (content > 1)
            mpz_divexact(scaled[i].get_mpz_t(), scaled[i].get_mpz_t(), content.get_mpz_t());
        if (!scaled[i].fits_slong_p()) throw Error("destabilizer weights overflow");
        w[i] = scaled[i].get_si();
    }
    return OnePS::of(std::move(w));
}

// Prefer the (n-1, -1, ..., -1)-type witnesses when they already work; they
// are the certificates the examples are phrased in.
std::optional<OnePS> canonical_destabilizer(const PairConfig& pair) {
    const std::size_t n = pair.n_vars();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> w(n, -1);
        w[i] = static_cast<long>(n) - 1;
        OnePS plus = OnePS::of(w);
        if (mu_pair(pair, plus) < 0) return plus;
        OnePS minus = plus.negated();
        if (mu_pair(pair, minus) < 0) return minus;
    }
    return std::nullopt;
}

}  // namespace

bool StabilityVerdict::verify(const PairConfig& pair) const {
    if (status == TorusStatus::unstable) {
        return destabilizer.has_value() && !destabilizer->is_trivial() &&
               mu_pair(pair, *destabilizer) < 0;
    }
    return verify_in_hull(points, target, hull_coefficients);
}

StabilityVerdict is_torus_semistable(const PairConfig& pair, const LpOptions& opts) {
    const std::size_t n = pair.n_vars();
    StabilityVerdict verdict;
    verdict.points = pair_points(pair);
    verdict.target = pair_target(pair);

    HullResult res = hull_membership(verdict.points, verdict.target, opts);
    if (auto* sep = std::get_if<Separated>(&res)) {
        verdict.status = TorusStatus::unstable;
        if (auto canonical = canonical_destabilizer(pair)) {
            verdict.destabilizer = std::move(*canonical);
        } else {
            verdict.destabilizer = integral_destabilizer(sep->functional);
            if (!(mu_pair(pair, *verdict.destabilizer) < 0))
                throw Error("internal: separator failed to destabilize");
        }
        return verdict;
    }
    verdict.hull_coefficients = std::get<InHull>(res).coefficients;

    // Stability needs the polytope to be full-dimensional inside the
    // constant-sum hyperplane and the target to admit an all-positive
    // combination; otherwise some nonzero lambda has mu_pair = 0.
    bool full_dim = false;
    if (verdict.points.size() > 1) {
        ExactMatrix diffs(verdict.points.size() - 1, n, FieldTag::Q());
        for (std::size_t i = 1; i < verdict.points.size(); ++i)
            for (std::size_t k = 0; k < n; ++k)
                diffs.set(i - 1, k,
                          Scalar::rational(verdict.points[i][k] - verdict.points[0][k]));
        full_dim = rank(diffs) == n - 1;
    }
    if (full_dim && hull_min_coefficient(verdict.points, verdict.target, opts) > 0) {
        verdict.status = TorusStatus::stable;
    } else {
        verdict.status = TorusStatus::strictly_semistable;
    }
    return verdict;
}

Polynomial initial_form(const Polynomial& f, std::span<const long> w) {
    long best = mu(f, w);
    std::vector<std::pair<Monomial, Scalar>> keep;
    for (const auto& [m, c] : f.terms()) {
        long dot = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            dot += w[i] * static_cast<long>(m[i]);
        if (dot == best) keep.emplace_back(m, c);
    }
    return Polynomial::from_terms(f.n_vars(), f.degree(), f.tag(), std::move(keep));
}

PairConfig limit_pair(const PairConfig& pair, const OnePS& lambda) {
    return PairConfig(initial_form(pair.Y, lambda.weights),
                      initial_form(pair.H, lambda.weights), pair.t);
}

std::optional<DestabilizerHit> destabilizer_search(const PairConfig& pair,
                                                   const std::vector<ExactMatrix>& moves,
                                                   const LpOptions& opts) {
    for (const ExactMatrix& m : moves) {
        PairConfig moved(pair.Y.substitute_linear(m), pair.H.substitute_linear(m), pair.t);
        StabilityVerdict v = is_torus_semistable(moved, opts);
        if (v.status == TorusStatus::unstable)
            return DestabilizerHit{m, *v.destabilizer};
    }
    return std::nullopt;
}

std::vector<ExactMatrix> default_basis_changes(const PairConfig& pair) {
    const std::size_t n = pair.n_vars();
    const FieldTag tag = pair.Y.tag();
    std::vector<ExactMatrix> moves;
    moves.push_back(ExactMatrix::identity(n, tag));

    if (pair.H.term_count() == 1) {
        const auto& [m, c] = pair.H.leading_term();
        std::size_t k = 0;
        while (m[k] == 0) ++k;
        if (k != 0) {
            ExactMatrix swap = ExactMatrix::identity(n, tag);
            swap.set(0, 0, Scalar::zero(tag));
            swap.set(k, k, Scalar::zero(tag));
            swap.set(0, k, Scalar::one(tag));
            swap.set(k, 0, Scalar::one(tag));
            moves.push_back(std::move(swap));
        }
        return moves;
    }

    // Gaussian move: with H = sum c_i x_i and j the first nonzero index,
    // build M with M c = e_0, so that H(M x) = x0. Column i is the
    // substitution image of x_i.
    std::vector<Scalar> c(n, Scalar::zero(tag));
    std::size_t j = n;
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = pair.H.coefficient(Monomial::unit(n, i));
        if (j == n && !c[i].is_zero()) j = i;
    }
    ExactMatrix mv(n, n, tag);
    Scalar inv = c[j].inverse();
    for (std::size_t i = 0; i < n; ++i)
        if (i != 0 && i != j) mv.set(i, i, Scalar::one(tag));
    // Column j carries (e_0 - sum_{i != j} c_i e_i) / c_j; when j != 0 the
    // displaced x0 image moves to e_j.
    mv.set(0, j, inv);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == j || i == 0) continue;
        if (!c[i].is_zero()) mv.set(i, j, -(c[i] * inv));
    }
    if (j != 0) {
        mv.set(j, 0, Scalar::one(tag));
    }
    moves.push_back(std::move(mv));
    return moves;
}

}  // namespace cubicgit

#include "cubicgit/fiber.hpp"

#include <numeric>

#include "cubicgit/errors.hpp"

namespace cubicgit {

namespace {

constexpr std::size_t kVars = 7;

void require_slice(const Polynomial& f, std::uint32_t degree) {
    if (f.n_vars() != kVars) throw DimensionMismatch("expected the 7-variable context");
    if (!f.is_zero() && f.degree() != degree)
        throw InhomogeneousError(degree, f.degree());
    for (const auto& [m, c] : f.terms())
        if (m[0] != 0) throw Error("polynomial must not involve x0");
}

// Terms of Y with x0-exponent e, divided by x0^e.
Polynomial x0_slice(const Polynomial& y, std::uint32_t e) {
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (const auto& [m, c] : y.terms()) {
        if (m[0] != e) continue;
        std::vector<std::uint32_t> exps = m.exponents();
        exps[0] = 0;
        terms.emplace_back(Monomial(std::move(exps)), c);
    }
    return Polynomial::from_terms(y.n_vars(), y.degree() - e, y.tag(), std::move(terms));
}

Polynomial times_x0_power(const Polynomial& f, std::uint32_t e) {
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::uint32_t> exps = m.exponents();
        exps[0] += e;
        terms.emplace_back(Monomial(std::move(exps)), c);
    }
    return Polynomial::from_terms(f.n_vars(), f.degree() + e, f.tag(), std::move(terms));
}

}  // namespace

ContainmentFamily::ContainmentFamily(Polynomial f3) : f3_(std::move(f3)) {
    if (f3_.is_zero()) throw ZeroPolynomial();
    if (!f3_.tag().is_rational()) throw FieldMismatch();
    require_slice(f3_, 3);

    for (const Monomial& m : monomial_basis(kVars, 2))
        if (m[0] == 0) quadric_basis_.push_back(m);

    std::map<Monomial, std::size_t, GrlexGreater> index;
    for (std::size_t i = 0; i < quadric_basis_.size(); ++i)
        index.emplace(quadric_basis_[i], i);

    partials_ = ExactMatrix(6, quadric_basis_.size(), f3_.tag());
    for (std::size_t i = 1; i < kVars; ++i) {
        Polynomial g = f3_.derivative(i);
        for (const auto& [m, c] : g.terms()) partials_.set(i - 1, index.at(m), c);
    }
    if (rank(partials_) != 6) {
        // A dependence sum a_i df3/dx_i = 0 exhibits the cone structure.
        auto kernel = kernel_basis(partials_.transposed());
        std::vector<long> a(6, 0);
        if (!kernel.empty())
            for (std::size_t i = 0; i < 6; ++i)
                a[i] = kernel.front()[i].fits_slong_p() ? kernel.front()[i].get_si() : 0;
        throw ConeDirection(std::move(a));
    }

    std::vector<std::vector<Rational>> rows(6, std::vector<Rational>(quadric_basis_.size()));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < quadric_basis_.size(); ++j)
            rows[i][j] = partials_.at(i, j).rat();
    w2_ = complement_basis(rows, quadric_basis_.size());
}

std::vector<Monomial> ContainmentFamily::w2_monomials() const {
    std::vector<Monomial> out;
    out.reserve(w2_.size());
    for (std::size_t i : w2_) out.push_back(quadric_basis_[i]);
    return out;
}

Decomposition decompose(const ContainmentFamily& family, const Polynomial& y) {
    if (y.n_vars() != kVars) throw DimensionMismatch("expected the 7-variable context");
    if (y.is_zero() || y.degree() != 3) throw Error("Y must be a cubic");
    if (!(y.tag() == family.f3().tag())) throw FieldMismatch();

    Polynomial restriction = x0_slice(y, 0);
    if (restriction.is_zero()) throw ContainsHyperplane();
    // restriction = c * f3 for a nonzero scalar c, else Y does not contain X.
    const auto& [lead_m, lead_c] = family.f3().leading_term();
    Scalar c = restriction.coefficient(lead_m) / lead_c;
    if (c.is_zero() || !(restriction == family.f3().scaled(c))) throw NotInFamily();

    Scalar inv = c.inverse();
    Polynomial yn = y.scaled(inv);
    Decomposition d{x0_slice(yn, 1), x0_slice(yn, 2), x0_slice(yn, 3).coefficient(
                        Monomial(std::vector<std::uint32_t>(kVars, 0)))};
    return d;
}

GroupElement GroupElement::identity() {
    return GroupElement{std::vector<Rational>(6, 0), Rational(1)};
}

Polynomial group_act(const GroupElement& g, const Polynomial& y) {
    if (g.a.size() != 6) throw DimensionMismatch("group element translation length");
    if (g.t == 0) throw Error("the torus coordinate of a group element must be nonzero");
    if (!y.tag().is_rational()) throw FieldMismatch();
    // x_i -> x_i + a_i x0 first, then x0 -> t x0.
    ExactMatrix ga = ExactMatrix::identity(kVars, y.tag());
    for (std::size_t i = 1; i < kVars; ++i)
        ga.set(0, i, Scalar::rational(g.a[i - 1]));
    ExactMatrix gm = ExactMatrix::identity(kVars, y.tag());
    gm.set(0, 0, Scalar::rational(g.t));
    return y.substitute_linear(ga).substitute_linear(gm);
}

GaNormalization ga_normalize(const ContainmentFamily& family, const Polynomial& f2) {
    require_slice(f2, 2);
    const auto& basis = family.quadric_basis();
    std::map<Monomial, std::size_t, GrlexGreater> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    // Solve v + P^T a = w with w supported on the complement columns:
    // unknowns (a, w-coordinates), matrix [ -P^T | E_w2 ].
    const std::size_t dim = basis.size();
    ExactMatrix m(dim, 6 + family.w2_basis().size(), f2.tag());
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m.set(j, i, -family.partials_matrix().at(i, j));
    for (std::size_t k = 0; k < family.w2_basis().size(); ++k)
        m.set(family.w2_basis()[k], 6 + k, Scalar::one(f2.tag()));

    std::vector<Rational> v(dim, 0);
    for (const auto& [mono, c] : f2.terms()) v[index.at(mono)] = c.rat();
    auto sol = solve(m, v);
    if (!sol) throw Error("internal: Ga normalization system is inconsistent");

    std::vector<Rational> a(sol->begin(), sol->begin() + 6);
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (std::size_t k = 0; k < family.w2_basis().size(); ++k) {
        const Rational& w = (*sol)[6 + k];
        if (w != 0)
            terms.emplace_back(basis[family.w2_basis()[k]], Scalar::rational(w));
    }
    return GaNormalization{std::move(a),
                           Polynomial::from_terms(kVars, 2, f2.tag(), std::move(terms))};
}

bool WeightedPoint::is_zero() const {
    for (const auto& v : c1)
        if (v != 0) return false;
    for (const auto& v : c2)
        if (v != 0) return false;
    return c3 == 0;
}

bool WeightedPoint::torsion_ambiguous() const {
    unsigned g = 0;
    for (const auto& v : c1)
        if (v != 0) g = std::gcd(g, 1u);
    for (const auto& v : c2)
        if (v != 0) g = std::gcd(g, 2u);
    if (c3 != 0) g = std::gcd(g, 3u);
    return g > 1;
}

WeightedPoint normal_form(const ContainmentFamily& family, const Polynomial& y) {
    Decomposition d = decompose(family, y);
    GaNormalization ga = ga_normalize(family, d.f2);

    // Apply the full translation to the normalized cubic and re-read the
    // components; f1 and f0 shift as well.
    Polynomial yn = family.f3() + times_x0_power(d.f2, 1) + times_x0_power(d.f1, 2) +
                    Polynomial::single(kVars, Monomial::unit(kVars, 0, 3), d.f0);
    GroupElement g{ga.a, Rational(1)};
    Decomposition nd = decompose(family, group_act(g, yn));

    WeightedPoint p;
    p.c1.assign(family.w2_basis().size(), Rational(0));
    std::map<Monomial, std::size_t, GrlexGreater> w2_index;
    for (std::size_t k = 0; k < family.w2_basis().size(); ++k)
        w2_index.emplace(family.quadric_basis()[family.w2_basis()[k]], k);
    for (const auto& [mono, c] : nd.f2.terms()) {
        auto it = w2_index.find(mono);
        if (it == w2_index.end())
            throw Error("internal: normalized f2 escaped the complement space");
        p.c1[it->second] = c.rat();
    }
    p.c2.assign(6, Rational(0));
    for (const auto& [mono, c] : nd.f1.terms()) {
        std::size_t i = 1;
        while (mono[i] == 0) ++i;
        p.c2[i - 1] = c.rat();
    }
    p.c3 = nd.f0.rat();
    if (p.is_zero()) throw ConeOrbit();
    return p;
}

namespace {

std::vector<std::pair<unsigned, Rational>> flat_coords(const WeightedPoint& p) {
    std::vector<std::pair<unsigned, Rational>> out;
    for (const auto& v : p.c1) out.emplace_back(1u, v);
    for (const auto& v : p.c2) out.emplace_back(2u, v);
    out.emplace_back(3u, p.c3);
    return out;
}

Rational rational_pow(const Rational& base, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

bool weighted_equal(const WeightedPoint& p, const WeightedPoint& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroWeightedPoint();
    auto fp = flat_coords(p), fq = flat_coords(q);
    if (fp.size() != fq.size()) throw DimensionMismatch("weighted point sizes");
    for (std::size_t i = 0; i < fp.size(); ++i)
        if ((fp[i].second == 0) != (fq[i].second == 0)) return false;
    for (std::size_t i = 0; i < fp.size(); ++i) {
        if (fp[i].second == 0) continue;
        for (std::size_t j = i + 1; j < fp.size(); ++j) {
            if (fp[j].second == 0) continue;
            unsigned wi = fp[i].first, wj = fp[j].first;
            if (rational_pow(fp[i].second, wj) * rational_pow(fq[j].second, wi) !=
                rational_pow(fq[i].second, wj) * rational_pow(fp[j].second, wi))
                return false;
        }
    }
    return true;
}

}  // namespace cubicgit

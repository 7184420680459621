#include "cubicgit/jacobian.hpp"

#include <map>

#include "cubicgit/errors.hpp"
#include "cubicgit/fp_matrix.hpp"
#include "cubicgit/matrix.hpp"

namespace cubicgit {

namespace {

struct BasisIndex {
    std::vector<Monomial> list;
    std::map<Monomial, std::size_t, GrlexGreater> index;

    explicit BasisIndex(std::size_t n_vars, std::uint32_t degree)
        : list(monomial_basis(n_vars, degree)) {
        for (std::size_t i = 0; i < list.size(); ++i) index.emplace(list[i], i);
    }
};

std::vector<Polynomial> nonzero_partials(const Polynomial& f) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < f.n_vars(); ++i) {
        Polynomial g = f.derivative(i);
        if (!g.is_zero()) out.push_back(std::move(g));
    }
    return out;
}

// Partial with denominators cleared, as (monomial, integer) pairs.
std::vector<std::pair<Monomial, Integer>> integer_form(const Polynomial& g) {
    Integer lcm = 1;
    for (const auto& [m, c] : g.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rat().get_den().get_mpz_t());
    std::vector<std::pair<Monomial, Integer>> out;
    for (const auto& [m, c] : g.terms())
        out.emplace_back(m, Integer(c.rat().get_num() * (lcm / c.rat().get_den())));
    return out;
}

unsigned long mult_matrix_rank(const Polynomial& f, std::uint32_t k) {
    const std::size_t n = f.n_vars();
    const std::uint32_t d = f.degree();
    const std::uint32_t e = k - (d - 1);
    BasisIndex target(n, k);
    std::vector<Monomial> shifts = monomial_basis(n, e);
    std::vector<Polynomial> partials = nonzero_partials(f);
    if (partials.empty()) return 0;

    if (f.tag().is_prime()) {
        FpMat m(shifts.size() * partials.size(), target.list.size(), f.tag().p);
        std::size_t r = 0;
        for (const Polynomial& g : partials) {
            for (const Monomial& a : shifts) {
                for (const auto& [mono, c] : g.terms())
                    m.set(r, target.index.at(a * mono), c.residue_value());
                ++r;
            }
        }
        return m.rank_destructive();
    }

    std::vector<SparseIntRow> rows;
    rows.reserve(shifts.size() * partials.size());
    for (const Polynomial& g : partials) {
        auto ig = integer_form(g);
        for (const Monomial& a : shifts) {
            SparseIntRow row;
            row.entries.reserve(ig.size());
            for (const auto& [mono, v] : ig)
                row.entries.emplace_back(target.index.at(a * mono), v);
            rows.push_back(std::move(row));
        }
    }
    return rank_sparse_q(std::move(rows), target.list.size());
}

}  // namespace

unsigned long graded_dim(const Polynomial& f, std::uint32_t k) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() < 2) throw DegreeTooSmall();
    const unsigned long dim_k =
        binomial(static_cast<unsigned>(f.n_vars() + k - 1), k);
    if (k < f.degree() - 1) return dim_k;
    return dim_k - mult_matrix_rank(f, k);
}

std::uint32_t socle_degree(const Polynomial& f) {
    if (f.degree() < 2) throw DegreeTooSmall();
    return static_cast<std::uint32_t>(f.n_vars()) * (f.degree() - 2);
}

SmoothnessResult is_smooth(const Polynomial& f) {
    return is_smooth(f, kWitnessPrimes);
}

SmoothnessResult is_smooth(const Polynomial& f,
                           std::span<const std::uint32_t> witness_primes) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() < 2) throw DegreeTooSmall();
    if (f.n_vars() < 2) throw DimensionMismatch("need at least two variables");
    const std::uint32_t test_degree = socle_degree(f) + 1;
    if (f.tag().is_prime()) {
        return {graded_dim(f, test_degree) == 0, std::nullopt, true};
    }
    for (std::uint32_t p : witness_primes) {
        try {
            Polynomial fp = f.reduce_mod_p(p);
            if (fp.is_zero()) continue;
            if (graded_dim(fp, test_degree) == 0) return {true, p, false};
        } catch (const BadPrime&) {
            continue;
        }
    }
    return {graded_dim(f, test_degree) == 0, std::nullopt, true};
}

namespace {

unsigned long hodge_known_smooth(const Polynomial& f, std::uint32_t p) {
    const long target = static_cast<long>((p + 1) * f.degree()) -
                        static_cast<long>(f.n_vars());
    if (target < 0) return 0;
    // Smooth Jacobian rings are Artinian with socle degree sigma.
    if (target > static_cast<long>(socle_degree(f))) return 0;
    return graded_dim(f, static_cast<std::uint32_t>(target));
}

}  // namespace

unsigned long hodge_primitive(const Polynomial& f, std::uint32_t p) {
    if (!is_smooth(f).smooth) throw NotSmooth();
    return hodge_known_smooth(f, p);
}

unsigned long intermediate_jacobian_dim(const Polynomial& f) {
    if (!is_smooth(f).smooth) throw NotSmooth();
    const std::size_t dim_x = f.n_vars() - 2;
    if (dim_x % 2 == 0) throw EvenDimension();
    const std::uint32_t m = static_cast<std::uint32_t>((dim_x + 1) / 2);
    unsigned long total = 0;
    for (std::uint32_t p = m; p <= 2 * m - 1; ++p) total += hodge_known_smooth(f, p);
    return total;
}

namespace {

// Echelon form of the degree-k slice of the Jacobian ideal; free columns are
// the monomial complement basis of R^k.
Echelon ideal_echelon(const Polynomial& f, std::uint32_t k, const BasisIndex& basis) {
    Echelon ech(basis.list.size(), f.tag());
    if (k + 1 < f.degree()) return ech;
    const std::uint32_t e = k - (f.degree() - 1);
    std::vector<Monomial> shifts = monomial_basis(f.n_vars(), e);
    for (const Polynomial& g : nonzero_partials(f)) {
        for (const Monomial& a : shifts) {
            std::vector<Scalar> row(basis.list.size(), Scalar::zero(f.tag()));
            for (const auto& [mono, c] : g.terms()) row[basis.index.at(a * mono)] = c;
            ech.add_row(std::move(row));
        }
    }
    return ech;
}

// Functional on Sym^sigma vanishing on the ideal slice, normalized to 1 on
// the socle monomial: back-substitution over the echelon rows.
std::vector<Scalar> socle_functional(const Polynomial& f, const Echelon& ech,
                                     std::size_t socle_col) {
    const std::size_t dim = ech.cols();
    const auto& pivots = ech.pivot_cols();
    std::vector<Scalar> phi(dim, Scalar::zero(f.tag()));
    phi[socle_col] = Scalar::one(f.tag());
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const auto& row = ech.row(k);
        Scalar acc = Scalar::zero(f.tag());
        for (std::size_t j = pivots[k] + 1; j < dim; ++j)
            if (!row[j].is_zero() && !phi[j].is_zero()) acc = acc + row[j] * phi[j];
        phi[pivots[k]] = -acc;
    }
    return phi;
}

}  // namespace

unsigned long gorenstein_pairing_rank(const Polynomial& f, std::uint32_t a) {
    if (!is_smooth(f).smooth) throw NotSmooth();
    const std::uint32_t sigma = socle_degree(f);
    if (a > sigma) throw Error("pairing degree exceeds the socle degree");

    const std::size_t n = f.n_vars();
    BasisIndex basis_a(n, a), basis_b(n, sigma - a), basis_s(n, sigma);
    Echelon ech_a = ideal_echelon(f, a, basis_a);
    Echelon ech_b = ideal_echelon(f, sigma - a, basis_b);
    Echelon ech_s = ideal_echelon(f, sigma, basis_s);

    std::vector<std::size_t> free_a = ech_a.free_cols();
    std::vector<std::size_t> free_b = ech_b.free_cols();
    std::vector<std::size_t> free_s = ech_s.free_cols();
    if (free_s.size() != 1)
        throw Error("internal: smooth socle is not one-dimensional");
    // Bases list largest first, so the first free column is the
    // grlex-greatest complement monomial.
    const std::size_t socle_col = free_s.front();

    std::vector<Scalar> phi = socle_functional(f, ech_s, socle_col);

    ExactMatrix pairing(free_a.size(), free_b.size(), f.tag());
    for (std::size_t u = 0; u < free_a.size(); ++u) {
        for (std::size_t v = 0; v < free_b.size(); ++v) {
            Monomial prod = basis_a.list[free_a[u]] * basis_b.list[free_b[v]];
            pairing.set(u, v, phi[basis_s.index.at(prod)]);
        }
    }
    return rank(pairing);
}

const char* SingularityClass::name() const {
    switch (kind) {
        case PointClass::not_on_hypersurface: return "NotOnHypersurface";
        case PointClass::smooth_point: return "SmoothPoint";
        case PointClass::node: return "Node";
        case PointClass::degenerate: return "Degenerate";
    }
    return "?";
}

SingularityClass classify_point(const Polynomial& f, const std::vector<Rational>& pt) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (!f.tag().is_rational()) throw FieldMismatch();
    if (pt.size() != f.n_vars()) throw DimensionMismatch("point length");
    const std::size_t n = f.n_vars();
    bool any = false;
    for (const auto& v : pt) any = any || v != 0;
    if (!any) throw ZeroPoint();

    std::vector<Scalar> point(n);
    for (std::size_t i = 0; i < n; ++i) point[i] = Scalar::rational(pt[i]);

    if (!f.evaluate(point).is_zero())
        return {PointClass::not_on_hypersurface};

    std::vector<Polynomial> grad;
    grad.reserve(n);
    for (std::size_t i = 0; i < n; ++i) grad.push_back(f.derivative(i));
    for (std::size_t i = 0; i < n; ++i) {
        if (!grad[i].is_zero() && !grad[i].evaluate(point).is_zero())
            return {PointClass::smooth_point};
    }

    // Affine Hessian in the chart of the first nonzero coordinate: second
    // partials of the dehomogenization are the matching entries of the
    // projective Hessian, and rescaling pt rescales them uniformly.
    std::size_t chart = 0;
    while (pt[chart] == 0) ++chart;
    ExactMatrix hess(n - 1, n - 1, f.tag());
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == chart) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == chart) continue;
            Polynomial second = grad[i].derivative(j);
            hess.set(r, c, second.is_zero() ? Scalar::zero(f.tag())
                                            : second.evaluate(point));
            ++c;
        }
        ++r;
    }
    std::size_t hr = rank(hess);
    if (hr == n - 1) return {PointClass::node, hr};
    return {PointClass::degenerate, hr};
}

JacobianSummary jacobian_summary(const Polynomial& f, std::uint32_t k_lo, std::uint32_t k_hi,
                                 bool with_smoothness) {
    if (k_hi < k_lo) throw Error("need k_lo <= k_hi");
    JacobianSummary s;
    s.n_vars = f.n_vars();
    s.degree = f.degree();
    s.k_lo = k_lo;
    s.k_hi = k_hi;
    for (std::uint32_t k = k_lo; k <= k_hi; ++k) s.dims.push_back(graded_dim(f, k));
    if (with_smoothness) {
        s.smooth = is_smooth(f);
        if (s.smooth->smooth) s.socle = socle_degree(f);
    }
    return s;
}

}  // namespace cubicgit

#include "cubicgit/hull.hpp"


#include "cubicgit/errors.hpp"

namespace cubicgit {

namespace {

// Dense exact simplex tableau with Bland's rule. Rows 0..m-1 hold the
// constraints with the rhs in the last slot; obj holds reduced costs and
// minus the current objective value.
struct Simplex {
    std::size_t m = 0;
    std::size_t n_total = 0;     // columns excluding rhs
    std::size_t n_enterable = 0; // entering candidates are a prefix
    std::vector<std::vector<Rational>> t;
    std::vector<Rational> obj;
    std::vector<std::size_t> basis;
    std::size_t pivots = 0;
    std::size_t budget = 0;

    void pivot(std::size_t row, std::size_t col) {
        if (++pivots > budget) throw PivotBudgetExceeded(budget);
        std::vector<Rational>& pr = t[row];
        Rational inv = 1 / pr[col];
        for (auto& v : pr) v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || t[i][col] == 0) continue;
            Rational f = t[i][col];
            for (std::size_t j = 0; j <= n_total; ++j)
                if (pr[j] != 0) t[i][j] -= f * pr[j];
        }
        if (obj[col] != 0) {
            Rational f = obj[col];
            for (std::size_t j = 0; j <= n_total; ++j)
                if (pr[j] != 0) obj[j] -= f * pr[j];
        }
        basis[row] = col;
    }

    // Bland: smallest improving column, leaving row by exact ratio test with
    // ties broken by smallest basic column index.
    void run() {
        for (;;) {
            std::size_t enter = n_total;
            for (std::size_t j = 0; j < n_enterable; ++j) {
                if (obj[j] < 0) { enter = j; break; }
            }
            if (enter == n_total) return;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][n_total] / t[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m) throw Error("simplex: unbounded direction in a bounded program");
            pivot(leave, enter);
        }
    }
};

struct Phase1 {
    Simplex s;
    std::vector<bool> flipped;
};

// On a feasible phase-1 optimum, artificials can linger in the basis at
// value zero; a later phase could silently push them positive. Pivot them
// out, dropping rows that are redundant in the original columns.
void evict_artificials(Simplex& s, std::size_t n_original) {
    for (std::size_t i = 0; i < s.m;) {
        if (s.basis[i] < n_original) { ++i; continue; }
        std::size_t j = 0;
        while (j < n_original && s.t[i][j] == 0) ++j;
        if (j < n_original) {
            s.pivot(i, j);
            ++i;
        } else {
            s.t.erase(s.t.begin() + static_cast<std::ptrdiff_t>(i));
            s.basis.erase(s.basis.begin() + static_cast<std::ptrdiff_t>(i));
            --s.m;
        }
    }
}

// Phase-1 tableau for {A x = b, x >= 0} given by columns.
Phase1 phase1(const std::vector<std::vector<Rational>>& columns,
              const std::vector<Rational>& rhs, const LpOptions& opts) {
    const std::size_t m = rhs.size();
    const std::size_t n = columns.size();
    Phase1 ph;
    Simplex& s = ph.s;
    s.m = m;
    s.n_total = n + m;
    s.n_enterable = n;
    s.budget = opts.pivot_budget;
    s.t.assign(m, std::vector<Rational>(s.n_total + 1, 0));
    ph.flipped.assign(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        // canonicalize on copy: callers may hand over raw fractions
        Rational b = rhs[i];
        b.canonicalize();
        ph.flipped[i] = b < 0;
        Rational sign = ph.flipped[i] ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            s.t[i][j] = columns[j][i];
            s.t[i][j].canonicalize();
            s.t[i][j] *= sign;
        }
        s.t[i][n + i] = 1;
        s.t[i][s.n_total] = sign * b;
    }
    s.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) s.basis[i] = n + i;
    // Reduced costs for minimizing the sum of artificials.
    s.obj.assign(s.n_total + 1, 0);
    for (std::size_t j = 0; j <= s.n_total; ++j) {
        Rational colsum = 0;
        for (std::size_t i = 0; i < m; ++i) colsum += s.t[i][j];
        Rational cost = (j >= n && j < s.n_total) ? 1 : 0;
        s.obj[j] = cost - colsum;
    }
    s.run();
    if (-s.obj[s.n_total] == 0) evict_artificials(s, n);
    return ph;
}

}  // namespace

namespace {

Rational canon(const Rational& q) {
    Rational r = q;
    r.canonicalize();
    return r;
}

}  // namespace

bool verify_in_hull(const std::vector<std::vector<Rational>>& points,
                    const std::vector<Rational>& target,
                    const std::vector<Rational>& coefficients) {
    if (coefficients.size() != points.size()) return false;
    Rational total = 0;
    std::vector<Rational> acc(target.size(), 0);
    for (std::size_t j = 0; j < points.size(); ++j) {
        Rational c = canon(coefficients[j]);
        if (c < 0) return false;
        total += c;
        for (std::size_t k = 0; k < target.size(); ++k)
            acc[k] += c * canon(points[j][k]);
    }
    if (total != 1) return false;
    for (std::size_t k = 0; k < target.size(); ++k)
        if (acc[k] != canon(target[k])) return false;
    return true;
}

bool verify_separated(const std::vector<std::vector<Rational>>& points,
                      const std::vector<Rational>& target,
                      const std::vector<Rational>& functional) {
    if (functional.size() != target.size()) return false;
    bool nonzero = false;
    for (const auto& v : functional) nonzero = nonzero || canon(v) != 0;
    if (!nonzero) return false;
    for (const auto& p : points) {
        Rational dot = 0;
        for (std::size_t k = 0; k < target.size(); ++k)
            dot += canon(functional[k]) * (canon(p[k]) - canon(target[k]));
        if (!(dot < 0)) return false;
    }
    return true;
}

HullResult hull_membership(const std::vector<std::vector<Rational>>& points,
                           const std::vector<Rational>& target,
                           const LpOptions& opts) {
    if (points.empty()) throw DimensionMismatch("need at least one point");
    const std::size_t d = target.size();
    for (const auto& p : points)
        if (p.size() != d) throw DimensionMismatch("point length vs target length");

    // Feasibility of sum x_j p_j = target, sum x_j = 1, x >= 0.
    std::vector<std::vector<Rational>> cols(points.size(),
                                            std::vector<Rational>(d + 1, 0));
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t k = 0; k < d; ++k) cols[j][k] = points[j][k];
        cols[j][d] = 1;
    }
    std::vector<Rational> rhs(d + 1, 0);
    for (std::size_t k = 0; k < d; ++k) rhs[k] = target[k];
    rhs[d] = 1;

    Phase1 ph = phase1(cols, rhs, opts);
    Simplex& s = ph.s;
    Rational value = -s.obj[s.n_total];
    if (value > 0) {
        // Farkas certificate off the optimal objective row: for artificial i,
        // reduced cost = 1 - y_i; unflip the sign changes applied to rows.
        std::vector<Rational> y(d + 1);
        for (std::size_t i = 0; i <= d; ++i) {
            y[i] = 1 - s.obj[points.size() + i];
            if (ph.flipped[i]) y[i] = -y[i];
        }
        std::vector<Rational> functional(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(d));
        if (!verify_separated(points, target, functional))
            throw Error("internal: Farkas certificate failed to separate");
        return Separated{std::move(functional)};
    }
    std::vector<Rational> coeff(points.size(), 0);
    for (std::size_t i = 0; i < s.m; ++i)
        if (s.basis[i] < points.size()) coeff[s.basis[i]] = s.t[i][s.n_total];
    if (!verify_in_hull(points, target, coeff))
        throw Error("internal: hull coefficients failed to reconstruct the target");
    return InHull{std::move(coeff)};
}

Rational hull_min_coefficient(const std::vector<std::vector<Rational>>& points,
                              const std::vector<Rational>& target,
                              const LpOptions& opts) {
    if (points.empty()) throw DimensionMismatch("need at least one point");
    const std::size_t d = target.size();
    const std::size_t n = points.size();
    // x = delta * 1 + y with y, delta >= 0: columns are the points plus one
    // aggregate column; maximize delta.
    std::vector<std::vector<Rational>> cols(n + 1, std::vector<Rational>(d + 1, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            cols[j][k] = points[j][k];
            cols[j][k].canonicalize();
        }
        cols[j][d] = 1;
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k <= d; ++k) cols[n][k] += cols[j][k];
    std::vector<Rational> rhs(d + 1, 0);
    for (std::size_t k = 0; k < d; ++k) rhs[k] = target[k];
    rhs[d] = 1;

    Phase1 ph = phase1(cols, rhs, opts);
    Simplex& s = ph.s;
    if (-s.obj[s.n_total] > 0)
        throw Error("hull_min_coefficient requires a target inside the hull");

    // Phase 2: minimize -delta; artificials may stay basic at zero but are
    // never allowed to enter.
    std::vector<Rational> cost(s.n_total, 0);
    cost[n] = -1;
    s.obj.assign(s.n_total + 1, 0);
    for (std::size_t j = 0; j <= s.n_total; ++j) {
        Rational acc = (j < s.n_total) ? cost[j] : Rational(0);
        for (std::size_t i = 0; i < s.m; ++i) {
            if (s.basis[i] < s.n_total && cost[s.basis[i]] != 0)
                acc -= cost[s.basis[i]] * s.t[i][j];
        }
        s.obj[j] = acc;
    }
    s.n_enterable = n + 1;
    s.run();
    // objective = -delta*, stored negated.
    return s.obj[s.n_total];
}

}  // namespace cubicgit

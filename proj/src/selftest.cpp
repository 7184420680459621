#include "cubicgit/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "cubicgit/errors.hpp"
#include "cubicgit/fiber.hpp"
#include "cubicgit/fp_matrix.hpp"
#include "cubicgit/jacobian.hpp"
#include "cubicgit/matrix.hpp"
#include "cubicgit/walls.hpp"

namespace cubicgit::selftest {

Polynomial fermat_cubic(std::size_t n_vars) {
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (std::size_t i = 0; i < n_vars; ++i)
        terms.emplace_back(Monomial::unit(n_vars, i, 3), Scalar::rational(1));
    return Polynomial::from_terms(n_vars, 3, FieldTag::Q(), std::move(terms));
}

Polynomial fermat_fourfold_slice() {
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (std::size_t i = 1; i < 7; ++i)
        terms.emplace_back(Monomial::unit(7, i, 3), Scalar::rational(1));
    return Polynomial::from_terms(7, 3, FieldTag::Q(), std::move(terms));
}

// ---------------------------------------------------------------------------
// Brute-force oracle: exhaustive zero-sum box scan, independent of the LP.
// mu_pair is convex along every line, so the innermost coordinate is
// minimized by ternary search on integers.
// ---------------------------------------------------------------------------

namespace {

struct LineFn {
    const std::vector<long long>& ybase;
    const std::vector<long>& yslope;
    const std::vector<long long>& hbase;
    const std::vector<long>& hslope;
    long long p, q;

    long long operator()(long u) const {
        long long my = ybase[0] + static_cast<long long>(u) * yslope[0];
        for (std::size_t s = 1; s < ybase.size(); ++s)
            my = std::max(my, ybase[s] + static_cast<long long>(u) * yslope[s]);
        long long mh = hbase[0] + static_cast<long long>(u) * hslope[0];
        for (std::size_t s = 1; s < hbase.size(); ++s)
            mh = std::max(mh, hbase[s] + static_cast<long long>(u) * hslope[s]);
        return q * my + p * mh;
    }
};

struct BoxScanner {
    long bound;
    long long p, q;  // t = p/q with q > 0
    std::size_t dims;
    std::vector<std::vector<long>> ry, rh;  // reduced support vectors
    BoxScan out{false, false, {}};
    long long best = 0;
    bool have_best = false;
    std::vector<long> prefix;
    // per-level dot accumulators
    std::vector<std::vector<long long>> ybase, hbase;

    void reduce(const Polynomial& f, std::vector<std::vector<long>>& red) const {
        for (const auto& [m, c] : f.terms()) {
            std::vector<long> r(dims);
            for (std::size_t i = 0; i < dims; ++i)
                r[i] = static_cast<long>(m[i + 1]) - static_cast<long>(m[0]);
            red.push_back(std::move(r));
        }
    }

    void record(long long value, long u, std::size_t level) {
        if (!have_best || value < best) {
            best = value;
            have_best = true;
            out.witness.assign(dims + 1, 0);
            long sum = 0;
            for (std::size_t i = 0; i < level; ++i) {
                out.witness[i + 1] = prefix[i];
                sum += prefix[i];
            }
            out.witness[dims] = u;
            sum += u;
            out.witness[0] = -sum;
        }
        if (value < 0) out.found_negative = true;
        if (value <= 0) out.found_nonpositive = true;
    }

    void scan_range(const LineFn& f, long lo, long hi, std::size_t level) {
        if (lo > hi) return;
        long a = lo, b = hi;
        while (b - a > 2) {
            long m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
            if (f(m1) <= f(m2)) b = m2;
            else a = m1;
        }
        for (long u = a; u <= b; ++u) record(f(u), u, level);
    }

    void descend(std::size_t level, long sum) {
        if (out.found_negative) return;
        if (level + 1 == dims) {
            long lo = std::max(-bound, -bound - sum);
            long hi = std::min(bound, bound - sum);
            if (lo > hi) return;
            std::vector<long> yslope(ry.size()), hslope(rh.size());
            for (std::size_t s = 0; s < ry.size(); ++s) yslope[s] = ry[s][level];
            for (std::size_t s = 0; s < rh.size(); ++s) hslope[s] = rh[s][level];
            LineFn f{ybase[level], yslope, hbase[level], hslope, p, q};
            bool zero_prefix = true;
            for (std::size_t i = 0; i < level; ++i)
                zero_prefix = zero_prefix && prefix[i] == 0;
            if (zero_prefix) {
                // exclude the all-zero weight vector
                scan_range(f, lo, std::min(hi, -1L), level);
                scan_range(f, std::max(lo, 1L), hi, level);
            } else {
                scan_range(f, lo, hi, level);
            }
            return;
        }
        for (long v = -bound; v <= bound; ++v) {
            if (out.found_negative) return;
            prefix[level] = v;
            for (std::size_t s = 0; s < ry.size(); ++s)
                ybase[level + 1][s] =
                    ybase[level][s] + static_cast<long long>(v) * ry[s][level];
            for (std::size_t s = 0; s < rh.size(); ++s)
                hbase[level + 1][s] =
                    hbase[level][s] + static_cast<long long>(v) * rh[s][level];
            descend(level + 1, sum + v);
        }
        prefix[level] = 0;
    }
};

}  // namespace

BoxScan brute_force_box_scan(const PairConfig& pair, long bound) {
    if (!pair.Y.tag().is_rational()) throw FieldMismatch();
    BoxScanner sc;
    sc.bound = bound;
    sc.dims = pair.n_vars() - 1;
    Rational t = pair.t;
    t.canonicalize();
    if (!t.get_num().fits_slong_p() || !t.get_den().fits_slong_p())
        throw Error("slope too large for the box oracle");
    sc.p = t.get_num().get_si();
    sc.q = t.get_den().get_si();
    sc.reduce(pair.Y, sc.ry);
    sc.reduce(pair.H, sc.rh);
    sc.prefix.assign(sc.dims, 0);
    sc.ybase.assign(sc.dims + 1, std::vector<long long>(sc.ry.size(), 0));
    sc.hbase.assign(sc.dims + 1, std::vector<long long>(sc.rh.size(), 0));
    sc.descend(0, 0);
    return sc.out;
}

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    long nonzero(long mag) {
        long v = pick(1, mag);
        return pick(0, 1) ? v : -v;
    }
};

Polynomial random_dense_cubic(Rng& rng, std::size_t n_vars) {
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (const Monomial& m : monomial_basis(n_vars, 3))
        terms.emplace_back(m, Scalar::rational(rng.nonzero(9)));
    return Polynomial::from_terms(n_vars, 3, FieldTag::Q(), std::move(terms));
}

// Random polynomial supported on x1..x6 inside the 7-variable context.
Polynomial random_slice(Rng& rng, std::uint32_t degree, bool allow_zero) {
    std::vector<std::pair<Monomial, Scalar>> terms;
    Monomial fallback = Monomial::unit(7, 1, degree);
    for (const Monomial& m : monomial_basis(7, degree)) {
        if (m[0] != 0) continue;
        long c = rng.pick(-3, 3);
        if (c != 0) terms.emplace_back(m, Scalar::rational(c));
    }
    Polynomial f = Polynomial::from_terms(7, degree, FieldTag::Q(), std::move(terms));
    if (f.is_zero() && !allow_zero)
        return Polynomial::single(7, fallback, Scalar::rational(1));
    return f;
}

Polynomial shift_by_x0(const Polynomial& g, std::uint32_t e) {
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (const auto& [m, c] : g.terms()) {
        auto exps = m.exponents();
        exps[0] += e;
        terms.emplace_back(Monomial(std::move(exps)), c);
    }
    return Polynomial::from_terms(g.n_vars(), g.degree() + e, g.tag(), std::move(terms));
}

Polynomial assemble_family_member(const Polynomial& f3, const Polynomial& f2,
                                  const Polynomial& f1, const Rational& f0) {
    Polynomial y = f3;
    if (!f2.is_zero()) y = y + shift_by_x0(f2, 1);
    if (!f1.is_zero()) y = y + shift_by_x0(f1, 2);
    if (f0 != 0)
        y = y + Polynomial::single(7, Monomial::unit(7, 0, 3), Scalar::rational(f0));
    return y;
}

std::string check_eq(unsigned long got, unsigned long want, const std::string& what) {
    if (got == want) return {};
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    return os.str();
}

std::string criterion1() {
    Polynomial y = fermat_fourfold_slice();
    Polynomial h = parse_poly("x0", 7);
    OnePS lam = OnePS::of({6, -1, -1, -1, -1, -1, -1});
    if (mu(y, lam) != -3) return "mu(Y, sigma^-1) != -3";
    if (mu(h, lam) != 6) return "mu(H, sigma^-1) != 6";
    for (long d : {10L, 100L, 1000L}) {
        Rational eps(1, d);
        Rational t = Rational(1, 2) - eps;
        Rational got = mu_pair(PairConfig(y, h, t), lam);
        if (got != Rational(-6) * eps) {
            std::ostringstream os;
            os << "mu_pair at eps=1/" << d << ": got " << got.get_str();
            return os.str();
        }
    }
    return {};
}

std::string criterion2(std::uint64_t seed) {
    Rng rng(seed ^ 0xc2);
    Polynomial h = parse_poly("x0", 7);
    OnePS family = OnePS::of({-6, 1, 1, 1, 1, 1, 1});
    for (int i = 0; i < 20; ++i) {
        Polynomial y = random_dense_cubic(rng, 7);
        PairConfig pair(y, h, Rational(51, 100));
        StabilityVerdict v = is_torus_semistable(pair);
        if (v.status != TorusStatus::unstable)
            return "dense cubic #" + std::to_string(i) + " not unstable at t=51/100";
        if (!v.verify(pair))
            return "certificate failed to re-verify on dense cubic #" + std::to_string(i);
        if (!(mu_pair(pair, family) < 0))
            return "(-6,1,...,1) does not witness dense cubic #" + std::to_string(i);
    }
    for (bool cone : {true, false}) {
        Polynomial y = cone ? fermat_fourfold_slice() : fermat_cubic(7);
        auto walls = wall_scan(y, h, Rational(0), Rational(1));
        std::string which = cone ? "cone" : "fermat";
        if (walls.size() != 1)
            return which + " pair: expected exactly one wall, got " +
                   std::to_string(walls.size());
        if (walls[0].t != Rational(1, 2)) return which + " pair: wall not at 1/2";
        if (walls[0].at != TorusStatus::strictly_semistable)
            return which + " pair: verdict at 1/2 is not strictly semistable";
        TorusStatus want_left = cone ? TorusStatus::unstable : TorusStatus::stable;
        if (walls[0].left != want_left || walls[0].right != TorusStatus::unstable)
            return which + " pair: wrong flanking statuses";
    }
    return {};
}

std::string criterion3(std::uint64_t seed) {
    Rng rng(seed ^ 0xc3);
    Polynomial h = parse_poly("x0", 7);
    OnePS sigma = OnePS::of({-6, 1, 1, 1, 1, 1, 1});
    for (int i = 0; i < 10; ++i) {
        Polynomial f3 = random_slice(rng, 3, false);
        Polynomial f2 = random_slice(rng, 2, true);
        Polynomial f1 = random_slice(rng, 1, true);
        Rational f0(rng.pick(-3, 3));
        Polynomial y = assemble_family_member(f3, f2, f1, f0);
        PairConfig lim = limit_pair(PairConfig(y, h, Rational(1, 2)), sigma);
        if (!(lim.Y == f3) || !(lim.H == h))
            return "limit #" + std::to_string(i) + " is not (f3, x0)";
    }
    return {};
}

std::string criterion4(std::uint64_t seed) {
    Polynomial f4 = fermat_cubic(6);
    for (auto [k, want] : std::initializer_list<std::pair<unsigned, unsigned long>>{
             {0, 1}, {2, 15}, {3, 20}, {6, 1}, {7, 0}}) {
        std::string e =
            check_eq(graded_dim(f4, k), want, "fourfold R^" + std::to_string(k));
        if (!e.empty()) return e;
    }
    Polynomial f5 = fermat_cubic(7);
    for (auto [k, want] :
         std::initializer_list<std::pair<unsigned, unsigned long>>{{2, 21}, {5, 21}}) {
        std::string e =
            check_eq(graded_dim(f5, k), want, "fivefold R^" + std::to_string(k));
        if (!e.empty()) return e;
    }
    // R^8 = 0 via full rank modulo a witness prime (sound over Q), plus an
    // exact rational spot check on a random 500-column submatrix.
    const std::uint32_t p = kWitnessPrimes[0];
    std::string e = check_eq(graded_dim(f5.reduce_mod_p(p), 8), 0, "fivefold R^8 mod p");
    if (!e.empty()) return e;

    std::vector<Monomial> shifts = monomial_basis(7, 6);
    std::vector<Monomial> target = monomial_basis(7, 8);
    std::map<Monomial, std::size_t, GrlexGreater> index;
    for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
    std::vector<std::pair<std::size_t, std::size_t>> gens;  // (shift, var)
    for (std::size_t a = 0; a < shifts.size(); ++a)
        for (std::size_t i = 0; i < 7; ++i) gens.emplace_back(a, i);
    std::mt19937_64 shuffler(seed ^ 0xc4);
    std::shuffle(gens.begin(), gens.end(), shuffler);
    gens.resize(500);

    std::vector<SparseIntRow> qrows(500);
    FpMat frows(500, target.size(), p);
    for (std::size_t r = 0; r < 500; ++r) {
        auto [a, i] = gens[r];
        // generator x^a * d(fermat)/dx_i = 3 x^a x_i^2
        Monomial m = shifts[a] * Monomial::unit(7, i, 2);
        std::size_t col = index.at(m);
        qrows[r].entries.emplace_back(col, Integer(3));
        frows.set(r, col, 3);
    }
    std::size_t rank_q = rank_sparse_q(std::move(qrows), target.size());
    std::size_t rank_p = frows.rank_destructive();
    if (rank_q != rank_p)
        return "spot check: rank over Q (" + std::to_string(rank_q) +
               ") != rank mod p (" + std::to_string(rank_p) + ")";
    return {};
}

std::string criterion5(std::uint64_t seed) {
    Rng rng(seed ^ 0xc5);
    const std::uint32_t p = 10007;
    int resamples = 0;
    for (std::size_t n : {std::size_t{6}, std::size_t{7}}) {
        for (int i = 0; i < 10; ++i) {
            std::vector<std::pair<Monomial, Scalar>> terms;
            for (const Monomial& m : monomial_basis(n, 3))
                terms.emplace_back(
                    m, Scalar::residue(
                           static_cast<std::uint64_t>(rng.pick(0, static_cast<long>(p) - 1)), p));
            Polynomial f = Polynomial::from_terms(n, 3, FieldTag::Fp(p), std::move(terms));
            if (f.is_zero()) { --i; continue; }
            std::vector<unsigned long> dims(n + 1);
            bool binomial_ok = true;
            for (std::uint32_t k = 0; k <= n; ++k) {
                dims[k] = graded_dim(f, k);
                binomial_ok =
                    binomial_ok && dims[k] == binomial(static_cast<unsigned>(n), k);
            }
            if (!binomial_ok) {
                // a random cubic is singular with probability about 1/p
                if (++resamples <= 2) { --i; continue; }
                return "binomial Hilbert series failed repeatedly (n=" +
                       std::to_string(n) + ")";
            }
            for (std::uint32_t k = 0; k <= n; ++k)
                if (dims[k] != dims[n - k])
                    return "Gorenstein symmetry failed at k=" + std::to_string(k);
        }
    }
    return {};
}

std::string criterion6() {
    std::string e = check_eq(intermediate_jacobian_dim(fermat_cubic(7)), 21,
                             "intermediate Jacobian of the cubic fivefold");
    if (!e.empty()) return e;
    return check_eq(intermediate_jacobian_dim(fermat_cubic(5)), 5,
                    "intermediate Jacobian of the cubic threefold");
}

GroupElement random_group_element(Rng& rng) {
    GroupElement g = GroupElement::identity();
    for (auto& a : g.a) {
        a = Rational(rng.pick(-6, 6), static_cast<unsigned long>(rng.pick(1, 3)));
        a.canonicalize();
    }
    g.t = Rational(rng.nonzero(3), static_cast<unsigned long>(rng.pick(1, 2)));
    g.t.canonicalize();
    return g;
}

std::string criterion7(std::uint64_t seed) {
    Rng rng(seed ^ 0xc7);
    ContainmentFamily family(fermat_fourfold_slice());
    if (family.w2_basis().size() != 15) return "w2 basis size != 15";
    Polynomial sample = assemble_family_member(
        family.f3(), parse_poly("x1^2 + x2*x3", 7), parse_poly("x4", 7), Rational(5));
    WeightedPoint sp = normal_form(family, sample);
    if (sp.c1.size() + sp.c2.size() + 1 != 22) return "coordinate ledger != 22";

    for (int i = 0; i < 100; ++i) {
        Polynomial f2 = random_slice(rng, 2, true);
        Polynomial f1 = random_slice(rng, 1, true);
        Rational f0(rng.pick(-3, 3));
        if (f2.is_zero() && f1.is_zero() && f0 == 0) f0 = 1;
        Polynomial y = assemble_family_member(family.f3(), f2, f1, f0);
        GroupElement g = random_group_element(rng);
        WeightedPoint a = normal_form(family, y);
        WeightedPoint b = normal_form(family, group_act(g, y));
        if (!weighted_equal(a, b))
            return "normal form not G-invariant at iteration " + std::to_string(i);
    }

    for (long tv : {2L, 3L}) {
        GroupElement g{std::vector<Rational>(6, 0), Rational(tv)};
        WeightedPoint q = normal_form(family, group_act(g, sample));
        for (std::size_t i = 0; i < 15; ++i)
            if (q.c1[i] != Rational(tv) * sp.c1[i]) return "weight-1 law failed";
        for (std::size_t i = 0; i < 6; ++i)
            if (q.c2[i] != Rational(tv * tv) * sp.c2[i]) return "weight-2 law failed";
        if (q.c3 != Rational(tv * tv * tv) * sp.c3) return "weight-3 law failed";
    }
    return {};
}

std::string criterion8() {
    ContainmentFamily family(fermat_fourfold_slice());
    try {
        normal_form(family, family.f3());
        return "normal_form(f3) did not raise ConeOrbit";
    } catch (const ConeOrbit&) {
    }
    try {
        ContainmentFamily bad(parse_poly("x1^3+x2^3+x3^3+x4^3+x5^3", 7));
        return "degenerate family did not raise ConeDirection";
    } catch (const ConeDirection& e) {
        std::vector<long> want{0, 0, 0, 0, 0, 1};
        if (e.kernel != want) return "ConeDirection kernel is not e6";
    }
    return {};
}

std::string criterion9() {
    Polynomial nodal = parse_poly(
        "x0*x1^2+x0*x2^2+x0*x3^2+x0*x4^2+x0*x5^2+x0*x6^2+x1^3+x2^3+x3^3+x4^3+x5^3+x6^3",
        7);
    std::vector<Rational> origin{1, 0, 0, 0, 0, 0, 0};
    SingularityClass c = classify_point(nodal, origin);
    if (c.kind != PointClass::node)
        return std::string("nodal example: got ") + c.name();
    Polynomial degen = parse_poly("x0*x1^2+x2^3+x3^3+x4^3+x5^3+x6^3", 7);
    SingularityClass d = classify_point(degen, origin);
    if (d.kind != PointClass::degenerate || d.hessian_rank != 1)
        return "degenerate example: wrong class or rank";
    return {};
}

std::string criterion10(std::uint64_t seed) {
    Rng rng(seed ^ 0xca);
    std::vector<Monomial> cubics = monomial_basis(7, 3);
    Polynomial h0 = parse_poly("x0", 7);
    std::vector<PairConfig> pairs;
    pairs.emplace_back(fermat_cubic(7), h0, Rational(49, 100));
    pairs.emplace_back(fermat_fourfold_slice(), h0, Rational(1, 2));
    pairs.emplace_back(fermat_fourfold_slice(), h0, Rational(49, 100));
    const Rational slopes[] = {Rational(1, 4),   Rational(1, 3),   Rational(1, 2),
                               Rational(49, 100), Rational(51, 100), Rational(2, 3)};
    while (pairs.size() < 53) {
        std::size_t sy = static_cast<std::size_t>(rng.pick(3, 7));
        std::vector<Monomial> pool = cubics;
        std::shuffle(pool.begin(), pool.end(), rng.gen);
        std::vector<std::pair<Monomial, Scalar>> terms;
        for (std::size_t i = 0; i < sy; ++i)
            terms.emplace_back(pool[i], Scalar::rational(rng.nonzero(5)));
        Polynomial y = Polynomial::from_terms(7, 3, FieldTag::Q(), std::move(terms));
        Polynomial h = Polynomial::single(
            7, Monomial::unit(7, static_cast<std::size_t>(rng.pick(0, 6))),
            Scalar::rational(1));
        pairs.emplace_back(std::move(y), std::move(h), slopes[rng.pick(0, 5)]);
    }

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const PairConfig& pair = pairs[i];
        StabilityVerdict v = is_torus_semistable(pair);
        if (!v.verify(pair))
            return "certificate failed to re-verify on pair " + std::to_string(i);
        if (v.status == TorusStatus::unstable) {
            BoxScan scan = brute_force_box_scan(pair, 20);
            if (!scan.found_negative)
                return "oracle found no negative weight for unstable pair " +
                       std::to_string(i);
        } else {
            BoxScan scan = brute_force_box_scan(pair, 20);
            if (scan.found_negative)
                return "oracle contradicts semistable verdict on pair " +
                       std::to_string(i);
            if (v.status == TorusStatus::stable && scan.found_nonpositive)
                return "oracle found mu_pair = 0 on stable pair " + std::to_string(i);
        }
    }
    return {};
}

template <typename F>
CriterionResult run_one(int id, const std::string& name, F&& body) {
    CriterionResult r{id, name, false, 0.0, ""};
    auto t0 = Clock::now();
    try {
        std::string detail = body();
        r.pass = detail.empty();
        r.detail = detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& opts) {
    const std::uint64_t s = opts.seed;
    std::vector<CriterionResult> out;
    out.push_back(run_one(1, "paper arithmetic -6*eps", [] { return criterion1(); }));
    out.push_back(run_one(2, "wall at 1/2", [&] { return criterion2(s); }));
    out.push_back(run_one(3, "limit lemma", [&] { return criterion3(s); }));
    out.push_back(run_one(4, "Jacobian ring dimensions", [&] { return criterion4(s); }));
    out.push_back(run_one(5, "binomial Hilbert series", [&] { return criterion5(s); }));
    out.push_back(
        run_one(6, "intermediate Jacobian dimensions", [] { return criterion6(); }));
    out.push_back(run_one(7, "weighted projective fiber", [&] { return criterion7(s); }));
    out.push_back(run_one(8, "cone exclusion", [] { return criterion8(); }));
    out.push_back(run_one(9, "singularity classification", [] { return criterion9(); }));
    out.push_back(run_one(10, "oracle equivalence", [&] { return criterion10(s); }));
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace cubicgit::selftest

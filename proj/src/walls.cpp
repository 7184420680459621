#include "cubicgit/walls.hpp"

#include <algorithm>
#include <map>

#include "cubicgit/errors.hpp"

namespace cubicgit {

namespace {

// Marks every achievable (mu(Y, l), mu(H, l)) pair with mu(H, l) != 0 for
// zero-sum integer l in [-B, B]^n. Works in the reduced coordinates
// l_1..l_{n-1} with l_0 = -(l_1 + ... + l_{n-1}); the innermost level updates
// the support dot products incrementally.
class BoxEnumerator {
public:
    BoxEnumerator(const Polynomial& y, const Polynomial& h, long bound)
        : b_(bound), dims_(y.n_vars() - 1) {
        reduce_support(y, ry_);
        reduce_support(h, rh_);
        offy_ = static_cast<long>(y.degree()) * bound * static_cast<long>(y.n_vars());
        offh_ = static_cast<long>(h.degree()) * bound * static_cast<long>(h.n_vars());
        grid_.assign(static_cast<std::size_t>(2 * offy_ + 1) *
                         static_cast<std::size_t>(2 * offh_ + 1),
                     false);
        doty_.assign((dims_ + 1) * ry_.size(), 0);
        doth_.assign((dims_ + 1) * rh_.size(), 0);
    }

    // (a, b) pairs with b != 0, a = mu(Y, l), b = mu(H, l).
    std::vector<std::pair<long, long>> run() {
        descend(0, 0);
        std::vector<std::pair<long, long>> out;
        for (long a = -offy_; a <= offy_; ++a)
            for (long bb = -offh_; bb <= offh_; ++bb)
                if (bb != 0 && grid_[index(a, bb)]) out.emplace_back(a, bb);
        return out;
    }

private:
    void reduce_support(const Polynomial& f, std::vector<std::vector<long>>& red) {
        for (const auto& [m, c] : f.terms()) {
            std::vector<long> r(dims_);
            for (std::size_t i = 0; i < dims_; ++i)
                r[i] = static_cast<long>(m[i + 1]) - static_cast<long>(m[0]);
            red.push_back(std::move(r));
        }
    }

    std::size_t index(long a, long bb) const {
        return static_cast<std::size_t>(a + offy_) *
                   static_cast<std::size_t>(2 * offh_ + 1) +
               static_cast<std::size_t>(bb + offh_);
    }

    void descend(std::size_t level, long sum) {
        long* dy = doty_.data() + level * ry_.size();
        long* dh = doth_.data() + level * rh_.size();
        if (level + 1 == dims_) {
            // l_level ranges so that both it and l_0 = -(sum + l_level) stay
            // in the box.
            long lo = std::max(-b_, -b_ - sum);
            long hi = std::min(b_, b_ - sum);
            if (lo > hi) return;
            long* ey = doty_.data() + dims_ * ry_.size();
            long* eh = doth_.data() + dims_ * rh_.size();
            for (std::size_t s = 0; s < ry_.size(); ++s)
                ey[s] = dy[s] + lo * ry_[s][level];
            for (std::size_t s = 0; s < rh_.size(); ++s)
                eh[s] = dh[s] + lo * rh_[s][level];
            for (long v = lo; v <= hi; ++v) {
                long a = ey[0], bb = eh[0];
                for (std::size_t s = 1; s < ry_.size(); ++s) a = std::max(a, ey[s]);
                for (std::size_t s = 1; s < rh_.size(); ++s) bb = std::max(bb, eh[s]);
                grid_[index(a, bb)] = true;
                for (std::size_t s = 0; s < ry_.size(); ++s) ey[s] += ry_[s][level];
                for (std::size_t s = 0; s < rh_.size(); ++s) eh[s] += rh_[s][level];
            }
            return;
        }
        long* ny = doty_.data() + (level + 1) * ry_.size();
        long* nh = doth_.data() + (level + 1) * rh_.size();
        for (long v = -b_; v <= b_; ++v) {
            for (std::size_t s = 0; s < ry_.size(); ++s)
                ny[s] = dy[s] + v * ry_[s][level];
            for (std::size_t s = 0; s < rh_.size(); ++s)
                nh[s] = dh[s] + v * rh_[s][level];
            descend(level + 1, sum + v);
        }
    }

    long b_;
    std::size_t dims_;
    long offy_{0}, offh_{0};
    std::vector<std::vector<long>> ry_, rh_;
    std::vector<long> doty_, doth_;
    std::vector<bool> grid_;
};

Rational midpoint(const Rational& a, const Rational& b) {
    Rational m = (a + b) / 2;
    m.canonicalize();
    return m;
}

}  // namespace

std::vector<Rational> critical_slopes(const Polynomial& Y, const Polynomial& H,
                                      const Rational& t_lo, const Rational& t_hi,
                                      const WallScanOptions& opts) {
    if (!(t_lo < t_hi)) throw Error("need t_lo < t_hi");
    std::vector<std::pair<long, long>> ratios;
    if (opts.candidates.has_value()) {
        for (const OnePS& l : *opts.candidates) {
            if (l.size() != Y.n_vars()) throw DimensionMismatch("candidate length");
            long b = mu(H, l);
            if (b == 0) continue;
            ratios.emplace_back(mu(Y, l), b);
        }
        if (ratios.empty()) throw EmptyCandidates();
    } else {
        if (Y.n_vars() < 2) throw Error("need at least two variables");
        ratios = BoxEnumerator(Y, H, opts.box_bound).run();
        // Destabilizers seen at the endpoints double as facet normals.
        for (const Rational& t : {t_lo, t_hi}) {
            if (t < 0) continue;
            StabilityVerdict v = is_torus_semistable(PairConfig(Y, H, t), opts.lp);
            if (v.status == TorusStatus::unstable) {
                long b = mu(H, *v.destabilizer);
                if (b != 0) ratios.emplace_back(mu(Y, *v.destabilizer), b);
            }
        }
        if (ratios.empty()) throw EmptyCandidates();
    }

    std::vector<Rational> slopes;
    for (auto [a, b] : ratios) {
        Rational t = Rational(-a) / Rational(b);
        t.canonicalize();
        if (t_lo < t && t <= t_hi) slopes.push_back(std::move(t));
    }
    std::sort(slopes.begin(), slopes.end());
    slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
    return slopes;
}

std::vector<WallCrossing> wall_scan(const Polynomial& Y, const Polynomial& H,
                                    const Rational& t_lo, const Rational& t_hi,
                                    const WallScanOptions& opts) {
    std::vector<Rational> slopes = critical_slopes(Y, H, t_lo, t_hi, opts);

    auto verdict_at = [&](const Rational& t) {
        return is_torus_semistable(PairConfig(Y, H, t), opts.lp).status;
    };
    std::map<Rational, TorusStatus> cache;
    auto verdict = [&](const Rational& t) {
        auto it = cache.find(t);
        if (it != cache.end()) return it->second;
        TorusStatus s = verdict_at(t);
        cache.emplace(t, s);
        return s;
    };

    std::vector<WallCrossing> walls;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        const Rational& s = slopes[i];
        Rational left = midpoint(i == 0 ? t_lo : slopes[i - 1], s);
        Rational right = (s == t_hi) ? t_hi
                                     : midpoint(s, i + 1 < slopes.size() ? slopes[i + 1] : t_hi);
        TorusStatus vl = verdict(left), va = verdict(s), vr = verdict(right);
        if (vl != va || va != vr) walls.push_back({s, vl, va, vr});
    }
    return walls;
}

}  // namespace cubicgit

#pragma once

#include <optional>
#include <vector>

#include "cubicgit/stability.hpp"

namespace cubicgit {

// A slope where the sampled torus verdict changes, with the verdicts just
// left of, exactly at, and just right of the slope.
struct WallCrossing {
    Rational t;
    TorusStatus left;
    TorusStatus at;
    TorusStatus right;
};

struct WallScanOptions {
    long box_bound = 12;  // candidate weights range over [-B, B]
    LpOptions lp{};
    // When absent, candidates come from the zero-sum integer box plus the
    // destabilizers observed at the interval endpoints.
    std::optional<std::vector<OnePS>> candidates{};
};

// Critical slopes -mu(Y,l)/mu(H,l) of the candidates inside (t_lo, t_hi],
// sorted; the verdict is evaluated exactly at each slope and at the rational
// midpoints between consecutive ones, and the slopes where it changes are
// returned. Throws EmptyCandidates when no candidate has mu(H, l) != 0.
std::vector<WallCrossing> wall_scan(const Polynomial& Y, const Polynomial& H,
                                    const Rational& t_lo, const Rational& t_hi,
                                    const WallScanOptions& opts = {});

// The distinct critical slopes themselves (the candidate wall set).
std::vector<Rational> critical_slopes(const Polynomial& Y, const Polynomial& H,
                                      const Rational& t_lo, const Rational& t_hi,
                                      const WallScanOptions& opts = {});

}  // namespace cubicgit

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "cubicgit/scalar.hpp"

namespace cubicgit {

// target = sum coefficients[i] * points[i], coefficients >= 0 summing to 1.
struct InHull {
    std::vector<Rational> coefficients;
};

// <functional, p - target> < 0 for every point p, strictly and exactly.
struct Separated {
    std::vector<Rational> functional;
};

using HullResult = std::variant<InHull, Separated>;

struct LpOptions {
    std::size_t pivot_budget = 200000;
};

// Exact decision of target in conv(points) by phase-1 simplex with Bland's
// rule. Certificates re-verify by plain dot products.
HullResult hull_membership(const std::vector<std::vector<Rational>>& points,
                           const std::vector<Rational>& target,
                           const LpOptions& opts = {});

// Requires target in conv(points): largest delta such that target is a convex
// combination with every coefficient >= delta. Positive exactly when the
// target can be written with all-positive coefficients.
Rational hull_min_coefficient(const std::vector<std::vector<Rational>>& points,
                              const std::vector<Rational>& target,
                              const LpOptions& opts = {});

// Independent certificate checks; dot products only.
bool verify_in_hull(const std::vector<std::vector<Rational>>& points,
                    const std::vector<Rational>& target,
                    const std::vector<Rational>& coefficients);
bool verify_separated(const std::vector<std::vector<Rational>>& points,
                      const std::vector<Rational>& target,
                      const std::vector<Rational>& functional);

}  // namespace cubicgit

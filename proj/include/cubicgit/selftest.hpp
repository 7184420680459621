#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicgit/polynomial.hpp"
#include "cubicgit/stability.hpp"

namespace cubicgit::selftest {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    double ms;
    std::string detail;
};

struct Options {
    std::uint64_t seed = 20240101;
};

// Runs the whole acceptance suite; one result per criterion.
std::vector<CriterionResult> run_all(const Options& opts = {});
bool all_passed(const std::vector<CriterionResult>& results);

// Independent check of the torus verdict: scans every nonzero zero-sum
// integer weight vector with entries in [-bound, bound], exploiting only the
// convexity of mu along lines. Entirely separate from the LP path.
struct BoxScan {
    bool found_negative;      // some lambda with mu_pair < 0
    bool found_nonpositive;   // some nonzero lambda with mu_pair <= 0
    std::vector<long> witness;  // a minimizing lambda
};
BoxScan brute_force_box_scan(const PairConfig& pair, long bound);

// Fermat cubic x0^3 + ... + x{n-1}^3, and the same placed in x1..x6 of the
// 7-variable context.
Polynomial fermat_cubic(std::size_t n_vars);
Polynomial fermat_fourfold_slice();

}  // namespace cubicgit::selftest

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lensbord/changemaker.hpp"
#include "lensbord/common.hpp"

namespace lensbord {

// The coin game: item i pays sigma_i points per copy, and the k-th copy of
// any single item costs k coins. t_sigma(sigma, m) is the best point total
// with at most m coins; buying k copies of item i costs k(k+1)/2 in total.

/// Best point total over all purchase plans of cost <= coins. Exact DP.
i64 t_sigma(const Changemaker& sigma, i64 coins);

/// All prefix optima at once: result[c] = t_sigma(sigma, c) for c = 0..coins.
std::vector<i64> t_sigma_sweep(const Changemaker& sigma, i64 coins);

/// Best point total over plans of cost exactly equal to coins, if any plan
/// has that cost.
std::optional<i64> t_sigma_exact(const Changemaker& sigma, i64 coins);

/// Value of the fractional relaxation: purchase options (k-th copy of item i)
/// are taken greedily by coin-per-point ratio k/sigma_i, the last one bought
/// fractionally at its marginal price. Always >= t_sigma(sigma, coins).
Rational t_sigma_rational(const Changemaker& sigma, i64 coins);

/// Number of non-increasing positive integer vectors alpha (any length) with
/// sum of alpha_j(alpha_j+1)/2 at most coins. The empty vector counts: that
/// convention is calibrated against the reference values 157,452 at 100
/// coins and 13,552,451 at 200.
u64 count_plans(i64 coins);

/// The staircase inverse of t_sigma: base[i] = least m with t_sigma(sigma,m)
/// >= i, precomputed for i = 1..p. Values past p follow the closed form
/// value(xp + k) = (x^2 p + x l1)/2 + xk + base[k].
class SigmaTable {
public:
    explicit SigmaTable(const Changemaker& sigma);

    const Changemaker& sigma() const { return sigma_; }
    const std::vector<i64>& base() const { return base_; }

    /// V-value at any index >= 0 (0 maps to 0 by convention).
    i64 value(i64 index) const;

private:
    Changemaker sigma_;
    std::vector<i64> base_;  // base_[i-1] holds the value at index i, i = 1..p
};

struct StructureCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct StructureReport {
    std::vector<StructureCheck> checks;
    bool all_pass = true;
};

/// Evaluates the structural identities of the coin-game staircase for
/// x = 1..x_max: optima at the full- and short-greedy budgets, the matching
/// staircase values, step-size bounds, and the five midpoint-value facts
/// (including the even-entry partition criterion).
StructureReport verify_structure(const Changemaker& sigma, int x_max);

}  // namespace lensbord

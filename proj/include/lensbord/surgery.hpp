#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lensbord/changemaker.hpp"
#include "lensbord/coin_game.hpp"
#include "lensbord/knot.hpp"

namespace lensbord {

struct SlopeWindow {
    int r = 1;
    i64 slope_min = 0;                 // lower bound on r^2 p
    std::optional<i64> slope_max;      // absent when unbounded (r = 1)
    i64 p_min = 0;
    std::optional<i64> p_max;
};

/// Admissible surgery slopes r^2 p for a knot with the given nu_plus. For
/// r >= 2 the window is finite; r = 1 only has a lower bound.
SlopeWindow slope_window(i64 nu_plus, int r);

/// Consistency of the slope r^2 p with 8*V_0, split by the parities of r and
/// p. For odd r the upper bound is tight exactly when the even entries of
/// sigma admit an equal-sum split.
struct V0SlopeCheck {
    std::string parity_case;
    i64 slope = 0;
    i64 lower = 0;
    i64 upper = 0;
    bool bounds_pass = false;
    std::optional<bool> equality_criterion_pass;  // odd r only
};
V0SlopeCheck v0_slope_check(const Changemaker& sigma, int r, i64 v0);

struct SigmaCandidate {
    i64 p = 0;
    Changemaker sigma;
};

/// All changemaker vectors consistent with the relevant data of a knot at
/// spacing r: the count identities pin |sigma|_1 from p, the staircase must
/// reproduce the observed counts below the top value, and for r >= 2 also at
/// it. Search is a pruned DFS over non-increasing positive entries. r = 1
/// leaves p unbounded, so a p_hint or p_max is required there.
std::vector<SigmaCandidate> reconstruct_sigma(const RelevantView& view,
                                              std::optional<i64> p_hint = std::nullopt,
                                              std::optional<i64> p_max = std::nullopt);

/// Most surgeries a single knot admits at spacing r: 3 for r = 1, 2 for even
/// r, 1 for odd r >= 3.
int count_bound(int r);

/// All spacings r whose slope window admits this sigma for the given
/// nu_plus. Has at most one element unless sigma = (1) with triangular
/// nu_plus, where two consecutive r survive.
std::set<int> feasible_r(const Changemaker& sigma, i64 nu_plus);

/// The one-parameter changemaker family (4s+3, 2s+1, s+1, s, 1,...,1) with s
/// trailing ones; valid for s >= 2.
Changemaker family_sigma(i64 s);

enum class FamilyMode { r1, r_ge2 };

struct FamilyRecovery {
    i64 band_count = 0;                 // a: indices with value in [296, 300]
    i64 plateau_value = 0;              // b: largest value held by >= a/2 indices
    i64 sqrt_floor = 0;                 // floor(sqrt(b/11))
    std::vector<i64> candidates;        // verified s values
};

/// Recovers the family parameter s from a V-sequence. r1 mode counts the
/// value-1 coefficients; r_ge2 mode uses the [296,300] band statistics and
/// verifies each of the three implied candidates against the family.
FamilyRecovery family_recover_s(const VSequence& v, FamilyMode mode);

struct FamilyCheck {
    std::string name;
    bool pass = false;
    i64 got = 0;
    i64 expect = 0;
};

/// Exact optimizer checks for the family: the two pinned optima at budgets
/// 295 and 300 and the two budget-~11s^2 inequalities. Requires s >= 5.
std::vector<FamilyCheck> family_checks(i64 s);

/// Synthetic V-sequence of a knot whose relevant data at spacing r match
/// sigma exactly: relevant samples follow the sigma staircase, intermediate
/// indices hold each value as long as possible. Returns nothing when no
/// step-1 interpolation exists.
std::optional<VSequence> synthetic_v_sequence(const SigmaTable& table, int r);

}  // namespace lensbord

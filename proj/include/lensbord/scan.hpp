#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lensbord/knot.hpp"
#include "lensbord/lattice.hpp"
#include "lensbord/surgery.hpp"

namespace lensbord {

struct ScanCandidate {
    i64 p = 0;
    std::vector<i64> sigma;
    i64 slope = 0;
    bool slope_window_pass = false;
    V0SlopeCheck v0_check;
    std::vector<Realization> realizations;  // empty when p is over the search cap
    bool realization_checked = false;
};

struct ScanLeg {
    int r = 1;
    std::optional<Parity> parity;  // absent for odd r
    bool skipped = false;
    std::string skip_reason;
    std::vector<ScanCandidate> candidates;
};

struct ScanReport {
    i64 nu_plus = 0;
    i64 v0 = 0;
    int r_max = 1;
    std::optional<i64> p_max_r1;
    std::vector<ScanLeg> legs;
};

/// Runs the full pipeline for every spacing r <= r_max (both parities when r
/// is even): slope window, changemaker reconstruction, slope/V0 consistency,
/// and lattice realization. Candidates that fail a necessary condition are
/// dropped; everything reported has passed every check it lists.
ScanReport scan(const VSequence& v, int r_max, std::optional<i64> p_max_r1,
                int threads = 1);

}  // namespace lensbord

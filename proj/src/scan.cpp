#include "lensbord/scan.hpp"

#include <algorithm>

namespace lensbord {

namespace {

constexpr i64 kRealizeCap = 500;
constexpr int kMaxScanR = 16;

ScanLeg scan_leg(const VSequence& v, int r, std::optional<Parity> parity,
                 std::optional<i64> p_max_r1, i64 nu_plus, i64 v0, int threads) {
    ScanLeg leg;
    leg.r = r;
    leg.parity = parity;
    if (r == 1 && !p_max_r1) {
        leg.skipped = true;
        leg.skip_reason = "r=1 needs an explicit p bound";
        return leg;
    }

    RelevantView view(v, r, parity.value_or(Parity::odd));
    const SlopeWindow window = slope_window(nu_plus, r);
    std::optional<i64> p_cap;
    if (r == 1)
        p_cap = p_max_r1;
    else if (window.p_max)
        p_cap = window.p_max;

    for (const SigmaCandidate& cand : reconstruct_sigma(view, std::nullopt, p_cap)) {
        ScanCandidate out;
        out.p = cand.p;
        out.sigma = cand.sigma.entries();
        out.slope = i64(r) * r * cand.p;
        out.slope_window_pass =
            out.slope >= window.slope_min &&
            (!window.slope_max || out.slope <= *window.slope_max);
        if (!out.slope_window_pass) continue;
        out.v0_check = v0_slope_check(cand.sigma, r, v0);
        if (!out.v0_check.bounds_pass) continue;
        if (out.v0_check.equality_criterion_pass && !*out.v0_check.equality_criterion_pass)
            continue;
        if (cand.p <= kRealizeCap) {
            out.realization_checked = true;
            out.realizations = realize(cand.sigma, threads);
            // The cobordant lens space must itself be realized by sigma.
            if (out.realizations.empty()) continue;
        }
        leg.candidates.push_back(std::move(out));
    }
    return leg;
}

}  // namespace

ScanReport scan(const VSequence& v, int r_max, std::optional<i64> p_max_r1, int threads) {
    if (r_max < 1 || r_max > kMaxScanR) fail(errc::invalid_argument, "r_max must be in [1, 16]");
    ScanReport report;
    report.nu_plus = v.nu_plus();
    report.v0 = v.at(0);
    report.r_max = r_max;
    report.p_max_r1 = p_max_r1;
    for (int r = 1; r <= r_max; ++r) {
        if (r % 2 == 1) {
            report.legs.push_back(scan_leg(v, r, std::nullopt, p_max_r1, report.nu_plus,
                                           report.v0, threads));
        } else {
            for (Parity parity : {Parity::odd, Parity::even})
                report.legs.push_back(scan_leg(v, r, parity, p_max_r1, report.nu_plus,
                                               report.v0, threads));
        }
    }
    return report;
}

}  // namespace lensbord

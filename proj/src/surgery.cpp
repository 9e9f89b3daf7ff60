#include "lensbord/surgery.hpp"

#include <algorithm>
#include <map>

namespace lensbord {

namespace {

i64 tri(i64 k) { return k * (k + 1) / 2; }

i64 ceil_div(i64 a, i64 b) { return (a + b - 1) / b; }

}  // namespace

SlopeWindow slope_window(i64 nu_plus, int r) {
    if (nu_plus < 0 || r < 1) fail(errc::invalid_argument, "need nu_plus >= 0 and r >= 1");
    SlopeWindow w;
    w.r = r;
    if (r == 1) {
        // p = |sigma|_1 + 2 nu_plus with |sigma|_1 >= 1; no upper bound here.
        w.slope_min = 2 * nu_plus + 1;
        w.p_min = 2 * nu_plus + 1;
        return w;
    }
    const i64 rr = i64(r) * r;
    w.slope_min = 2 * nu_plus + r;
    i64 hi = 4 * nu_plus + 5;
    if (r >= 3) hi = std::min(hi, (2 * rr * nu_plus) / ((r - 1) * (r - 2)));
    w.slope_max = hi;
    w.p_min = ceil_div(w.slope_min, rr);
    w.p_max = hi / rr;
    return w;
}

V0SlopeCheck v0_slope_check(const Changemaker& sigma, int r, i64 v0) {
    if (r < 1 || v0 < 0) fail(errc::invalid_argument, "need r >= 1 and v0 >= 0");
    V0SlopeCheck out;
    const i64 p = sigma.p();
    out.slope = i64(r) * r * p;
    if (r % 2 == 0 && p % 2 == 0) {
        out.parity_case = "r even, p even";
        out.lower = out.upper = 8 * v0;
    } else if (r % 2 == 0) {
        out.parity_case = "r even, p odd";
        out.lower = 8 * v0 - 2 * r;
        out.upper = 8 * v0 + 2 * r;
    } else {
        out.parity_case = "r odd";
        out.lower = 8 * v0 - 3 * sigma.odd_count();
        out.upper = 8 * v0 + sigma.odd_count();
        out.equality_criterion_pass =
            (out.slope == out.upper) == sigma.even_equal_partition();
    }
    out.bounds_pass = out.lower <= out.slope && out.slope <= out.upper;
    return out;
}

namespace {

class SigmaSearch {
public:
    SigmaSearch(const RelevantView& view, i64 p, i64 l1)
        : view_(view), p_(p), l1_(l1), v0_(view.first_value()) {
        targets_.reserve(static_cast<std::size_t>(v0_) + 1);
        for (i64 m = 0; m <= v0_; ++m) targets_.push_back(view.count_at_most(m));
        dp_.assign(static_cast<std::size_t>(v0_) + 1, 0);
    }

    void run(std::vector<SigmaCandidate>& out) {
        entries_.clear();
        descend(l1_, 0, 0, out);
    }

private:
    // Best points per budget after adding one item worth `value`.
    std::vector<i64> extend(const std::vector<i64>& dp, i64 value) const {
        std::vector<i64> next = dp;
        for (i64 c = v0_; c >= 1; --c)
            for (i64 k = 1; tri(k) <= c; ++k)
                next[c] = std::max(next[c], next[c - tri(k)] + k * value);
        return next;
    }

    bool counts_admissible(const std::vector<i64>& dp) const {
        for (i64 m = 0; m < v0_; ++m)
            if (dp[m] > targets_[m]) return false;
        if (view_.r() >= 2 && dp[v0_] > view_.nu_plus_rel()) return false;
        return true;
    }

    void descend(i64 cap, i64 sum, i64 sumsq, std::vector<SigmaCandidate>& out) {
        if (sum == l1_ && sumsq == p_) {
            finish(out);
            return;
        }
        for (i64 w = std::min(cap, (l1_ - sum + 1) / 2); w >= 1; --w) {
            const i64 rem_s = l1_ - sum - w;
            const i64 rem_ss = p_ - sumsq - w * w;
            if (rem_ss < 0 || rem_ss < rem_s || rem_ss > rem_s * w) continue;
            if ((rem_s == 0) != (rem_ss == 0)) continue;
            std::vector<i64> saved = dp_;
            dp_ = extend(dp_, w);
            if (counts_admissible(dp_)) {
                entries_.push_back(w);
                descend(w, sum + w, sumsq + w * w, out);
                entries_.pop_back();
            }
            dp_ = std::move(saved);
        }
    }

    void finish(std::vector<SigmaCandidate>& out) {
        if (!is_changemaker(entries_)) return;
        for (i64 m = 0; m < v0_; ++m)
            if (dp_[m] != targets_[m]) return;
        Changemaker sigma(entries_);
        if (view_.r() >= 2) {
            if (dp_[v0_] != view_.nu_plus_rel()) return;
        } else {
            auto exact = t_sigma_exact(sigma, v0_);
            if (!exact || *exact < view_.nu_plus_rel()) return;
        }
        out.push_back({p_, std::move(sigma)});
    }

    const RelevantView& view_;
    i64 p_;
    i64 l1_;
    i64 v0_;
    std::vector<i64> targets_;
    std::vector<i64> dp_;
    std::vector<i64> entries_;
};

}  // namespace

std::vector<SigmaCandidate> reconstruct_sigma(const RelevantView& view,
                                              std::optional<i64> p_hint,
                                              std::optional<i64> p_max) {
    const int r = view.r();
    const i64 nu_rel = view.nu_plus_rel();
    const bool half_shift = r % 2 == 0 && view.p_parity() == Parity::odd;
    const i64 eps = half_shift ? 1 : 0;

    std::vector<i64> p_list;
    if (p_hint) {
        if (*p_hint < 1) fail(errc::invalid_argument, "p hint must be positive");
        if (r % 2 == 0 && (*p_hint % 2 == 0) != (view.p_parity() == Parity::even))
            fail(errc::invalid_argument, "p hint parity disagrees with the view");
        p_list.push_back(*p_hint);
    } else if (r == 1) {
        if (!p_max) fail(errc::missing_bound, "r=1 reconstruction needs a p bound");
        for (i64 p = 2 * nu_rel + 1; p <= *p_max; ++p) p_list.push_back(p);
    } else {
        const i64 lo = std::max<i64>(1, ceil_div(2 * nu_rel + eps + 1, r));
        i64 hi = (2 * nu_rel + eps) / (r - 1);
        if (p_max) hi = std::min(hi, *p_max);
        for (i64 p = lo; p <= hi; ++p) {
            if (r % 2 == 0 && (p % 2 == 0) != (view.p_parity() == Parity::even)) continue;
            p_list.push_back(p);
        }
    }

    std::vector<SigmaCandidate> out;
    for (i64 p : p_list) {
        const i64 l1 = i64(r) * p - 2 * nu_rel - eps;
        if (l1 < 1 || l1 > p) continue;
        SigmaSearch(view, p, l1).run(out);
    }
    std::sort(out.begin(), out.end(), [](const SigmaCandidate& a, const SigmaCandidate& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.sigma < b.sigma;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const SigmaCandidate& a, const SigmaCandidate& b) {
                              return a.p == b.p && a.sigma == b.sigma;
                          }),
              out.end());
    return out;
}

int count_bound(int r) {
    if (r < 1) fail(errc::invalid_argument, "r must be positive");
    if (r == 1) return 3;
    return r % 2 == 0 ? 2 : 1;
}

std::set<int> feasible_r(const Changemaker& sigma, i64 nu_plus) {
    if (nu_plus < 0) fail(errc::invalid_argument, "nu_plus must be non-negative");
    std::set<int> out;
    const i64 p = sigma.p();
    const i64 l1 = sigma.l1();
    for (i64 r = 1; r <= 2 * nu_plus + 6; ++r) {
        const i64 gap = r * r * p - r * l1;
        if (gap >= 2 * nu_plus && gap <= 2 * nu_plus + 2 * (r - 1)) out.insert(static_cast<int>(r));
    }
    return out;
}

Changemaker family_sigma(i64 s) {
    if (s < 2) fail(errc::invalid_argument, "family parameter must be at least 2");
    std::vector<i64> entries = {4 * s + 3, 2 * s + 1, s + 1, s};
    entries.insert(entries.end(), static_cast<std::size_t>(s), 1);
    return Changemaker(std::move(entries));
}

namespace {

// floor(sqrt(b/11)) in exact integer arithmetic.
i64 sqrt_floor_over_11(i64 b) {
    i64 s = 0;
    while (11 * (s + 1) * (s + 1) <= b) ++s;
    return s;
}

bool family_view_matches(const VSequence& v, const SigmaTable& table, int r) {
    const i64 p = table.sigma().p();
    const i64 l1 = table.sigma().l1();
    const bool half_shift = r % 2 == 0 && p % 2 == 1;
    const i64 eps = half_shift ? 1 : 0;
    if ((i64(r) * p - l1 - eps) % 2 != 0) return false;
    const i64 nu_rel = (i64(r) * p - l1 - eps) / 2;
    RelevantView view(v, r, p % 2 == 0 ? Parity::even : Parity::odd);
    if (view.nu_plus_rel() != nu_rel) return false;
    for (i64 i = 0; i < nu_rel; ++i)
        if (view.value(i) != table.value(nu_rel - i)) return false;
    return true;
}

}  // namespace

FamilyRecovery family_recover_s(const VSequence& v, FamilyMode mode) {
    FamilyRecovery out;
    if (mode == FamilyMode::r1) {
        i64 ones = 0;
        for (i64 val : v.values())
            if (val == 1) ++ones;
        if (ones >= 11 && (ones - 3) % 4 == 0) {
            const i64 s = (ones - 3) / 4;
            if (family_view_matches(v, SigmaTable(family_sigma(s)), 1)) out.candidates.push_back(s);
        }
        return out;
    }

    for (i64 val : v.values())
        if (val >= 296 && val <= 300) ++out.band_count;
    if (out.band_count == 0) return out;

    std::map<i64, i64, std::greater<i64>> freq;
    for (i64 val : v.values()) ++freq[val];
    for (const auto& [val, cnt] : freq) {
        if (2 * cnt >= out.band_count) {
            out.plateau_value = val;
            break;
        }
    }
    if (out.plateau_value == 0) return out;

    out.sqrt_floor = sqrt_floor_over_11(out.plateau_value);
    for (i64 s = out.sqrt_floor; s <= out.sqrt_floor + 2; ++s) {
        if (s < 5) continue;
        SigmaTable table(family_sigma(s));
        for (int r : feasible_r(table.sigma(), v.nu_plus())) {
            if (r < 2) continue;
            if (family_view_matches(v, table, r)) {
                out.candidates.push_back(s);
                break;
            }
        }
    }
    return out;
}

std::vector<FamilyCheck> family_checks(i64 s) {
    if (s < 5) fail(errc::invalid_argument, "checks require family parameter at least 5");
    const Changemaker sigma = family_sigma(s);
    std::vector<FamilyCheck> out;
    auto eq = [&](std::string name, i64 got, i64 expect) {
        out.push_back({std::move(name), got == expect, got, expect});
    };
    eq("optimum with 295 coins", t_sigma(sigma, 295), 110 * s + 75);
    eq("optimum with 300 coins", t_sigma(sigma, 300), 110 * s + 80);
    const i64 b1 = 11 * s * s - 33 * s + 24;
    const i64 b2 = b1 + 1;
    i64 got1 = t_sigma(sigma, b1);
    i64 cap1 = 22 * s * s - 22 * s - 28;
    out.push_back({"optimum at the low crossover budget", got1 <= cap1, got1, cap1});
    i64 got2 = t_sigma(sigma, b2);
    i64 floor2 = 22 * s * s - 22 * s - 24;
    out.push_back({"optimum at the high crossover budget", got2 >= floor2, got2, floor2});
    return out;
}

std::optional<VSequence> synthetic_v_sequence(const SigmaTable& table, int r) {
    if (r < 1) fail(errc::invalid_argument, "spacing must be at least 1");
    const i64 p = table.sigma().p();
    const i64 l1 = table.sigma().l1();
    const bool half_shift = r % 2 == 0 && p % 2 == 1;
    const i64 eps = half_shift ? 1 : 0;
    const i64 nu_rel = (i64(r) * p - l1 - eps) / 2;
    const i64 offset = half_shift ? r / 2 : 0;

    std::vector<i64> values(static_cast<std::size_t>(offset + nu_rel * r), 0);
    auto sample = [&](i64 k) { return k >= nu_rel ? 0 : table.value(nu_rel - k); };
    for (i64 i = 0; i < offset; ++i) values[static_cast<std::size_t>(i)] = sample(0);
    for (i64 k = 0; k < nu_rel; ++k) {
        const i64 here = sample(k);
        const i64 next = sample(k + 1);
        const i64 drop = here - next;
        if (drop > r) return std::nullopt;  // no step-1 interpolation exists
        for (i64 t = 0; t < r; ++t) {
            const i64 idx = offset + k * r + t;
            if (idx >= static_cast<i64>(values.size())) break;
            values[static_cast<std::size_t>(idx)] = here - std::max<i64>(0, t - (r - drop));
        }
    }
    return VSequence(std::move(values));
}

}  // namespace lensbord

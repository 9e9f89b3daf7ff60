#include "lensbord/coin_game.hpp"

#include <algorithm>
#include <limits>

namespace lensbord {

namespace {

constexpr i64 kMaxPlanBudget = 100000;

i64 tri(i64 k) { return k * (k + 1) / 2; }

void require_budget(i64 coins) {
    if (coins < 0) fail(errc::invalid_argument, "coin budget must be non-negative");
}

}  // namespace

std::vector<i64> t_sigma_sweep(const Changemaker& sigma, i64 coins) {
    require_budget(coins);
    std::vector<i64> best(static_cast<std::size_t>(coins) + 1, 0);
    for (i64 value : sigma.entries()) {
        // Walk budgets downward so each item contributes once; copy counts are
        // folded in directly since the k-th copy costs k coins.
        for (i64 c = coins; c >= 1; --c) {
            i64 best_c = best[c];
            for (i64 k = 1; tri(k) <= c; ++k) {
                i64 cand = best[c - tri(k)] + k * value;
                if (cand > best_c) best_c = cand;
            }
            best[c] = best_c;
        }
    }
    return best;
}

i64 t_sigma(const Changemaker& sigma, i64 coins) { return t_sigma_sweep(sigma, coins).back(); }

std::optional<i64> t_sigma_exact(const Changemaker& sigma, i64 coins) {
    require_budget(coins);
    constexpr i64 kUnreachable = std::numeric_limits<i64>::min();
    std::vector<i64> best(static_cast<std::size_t>(coins) + 1, kUnreachable);
    best[0] = 0;
    for (i64 value : sigma.entries()) {
        for (i64 c = coins; c >= 1; --c) {
            i64 best_c = best[c];
            for (i64 k = 1; tri(k) <= c; ++k) {
                if (best[c - tri(k)] == kUnreachable) continue;
                i64 cand = best[c - tri(k)] + k * value;
                if (cand > best_c) best_c = cand;
            }
            best[c] = best_c;
        }
    }
    if (best[coins] == kUnreachable) return std::nullopt;
    return best[coins];
}

Rational t_sigma_rational(const Changemaker& sigma, i64 coins) {
    require_budget(coins);
    if (coins == 0) return Rational(0);

    // Smallest full-greedy depth whose total cost covers the budget.
    i64 x_cap = 1;
    while (x_cap * (x_cap * sigma.p() + sigma.l1()) / 2 < coins) ++x_cap;

    struct Option {
        i64 price;  // k coins for the k-th copy
        i64 value;  // sigma_i points
        i64 item;
    };
    std::vector<Option> options;
    const auto& entries = sigma.entries();
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (i64 k = 1; k <= x_cap * entries[i]; ++k)
            options.push_back({k, entries[i], static_cast<i64>(i)});
    std::sort(options.begin(), options.end(), [](const Option& a, const Option& b) {
        i64 lhs = a.price * b.value;
        i64 rhs = b.price * a.value;
        if (lhs != rhs) return lhs < rhs;
        if (a.item != b.item) return a.item < b.item;
        return a.price < b.price;
    });

    i64 remaining = coins;
    i64 whole_points = 0;
    for (const Option& opt : options) {
        if (remaining >= opt.price) {
            remaining -= opt.price;
            whole_points += opt.value;
            if (remaining == 0) break;
        } else {
            return Rational(whole_points) + Rational(opt.value * remaining, opt.price);
        }
    }
    return Rational(whole_points);
}

u64 count_plans(i64 coins) {
    require_budget(coins);
    if (coins > kMaxPlanBudget) fail(errc::capacity, "plan-count budget too large");
    using big = unsigned __int128;
    const big kOverflow = (big(1) << 100);
    std::vector<big> exact(static_cast<std::size_t>(coins) + 1, 0);
    exact[0] = 1;  // the empty plan, included per the calibrated convention
    bool overflowed = false;
    for (i64 part = 1; tri(part) <= coins; ++part) {
        const i64 w = tri(part);
        for (i64 b = w; b <= coins; ++b) {
            exact[b] += exact[b - w];
            if (exact[b] > kOverflow) {
                exact[b] = kOverflow;
                overflowed = true;
            }
        }
    }
    big total = 0;
    for (i64 b = 0; b <= coins; ++b) {
        total += exact[b];
        if (total > kOverflow) {
            total = kOverflow;
            overflowed = true;
        }
    }
    if (overflowed || total > std::numeric_limits<u64>::max())
        fail(errc::capacity, "plan count exceeds 64 bits");
    return static_cast<u64>(total);
}

SigmaTable::SigmaTable(const Changemaker& sigma) : sigma_(sigma) {
    const i64 p = sigma_.p();
    const i64 top = (p + sigma_.l1()) / 2;
    std::vector<i64> sweep = t_sigma_sweep(sigma_, top);
    base_.reserve(static_cast<std::size_t>(p));
    i64 m = 0;
    for (i64 i = 1; i <= p; ++i) {
        while (m <= top && sweep[m] < i) ++m;
        if (m > top) fail(errc::invalid_argument, "staircase inversion ran past its budget");
        base_.push_back(m);
    }
}

i64 SigmaTable::value(i64 index) const {
    if (index < 0) fail(errc::invalid_argument, "staircase index must be non-negative");
    if (index == 0) return 0;
    const i64 p = sigma_.p();
    if (index <= p) return base_[static_cast<std::size_t>(index) - 1];
    using big = __int128;
    const big x = index / p;
    const big k = index % p;
    const big v = x * (x * p + sigma_.l1()) / 2 + x * k +
                  (k == 0 ? 0 : base_[static_cast<std::size_t>(k) - 1]);
    if (v > std::numeric_limits<i64>::max()) fail(errc::capacity, "staircase value overflows");
    return static_cast<i64>(v);
}

StructureReport verify_structure(const Changemaker& sigma, int x_max) {
    if (x_max < 1) fail(errc::invalid_argument, "x_max must be at least 1");
    StructureReport report;
    auto add = [&](std::string name, bool pass, std::string detail) {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
        report.all_pass = report.all_pass && pass;
    };

    const i64 p = sigma.p();
    const i64 l1 = sigma.l1();
    const i64 odd = sigma.odd_count();
    const i64 top_budget = (i64(x_max) * x_max * p + i64(x_max) * l1) / 2;
    std::vector<i64> sweep = t_sigma_sweep(sigma, top_budget + 1);

    // Direct staircase from the sweep, no closed form involved.
    const i64 top_index = sweep[top_budget];
    std::vector<i64> direct(static_cast<std::size_t>(top_index) + 1, 0);
    {
        i64 m = 0;
        for (i64 i = 1; i <= top_index; ++i) {
            while (sweep[m] < i) ++m;
            direct[i] = m;
        }
    }

    for (i64 x = 1; x <= x_max; ++x) {
        const i64 full_budget = (x * x * p + x * l1) / 2;
        const i64 short_budget = (x * x * p - x * l1) / 2;
        add("optimum at full greedy budget, depth " + std::to_string(x),
            sweep[full_budget] == x * p,
            "T(" + std::to_string(full_budget) + ")=" + std::to_string(sweep[full_budget]));
        add("optimum one ratio level down, depth " + std::to_string(x),
            sweep[short_budget] == x * p - l1,
            "T(" + std::to_string(short_budget) + ")=" + std::to_string(sweep[short_budget]));
        add("staircase value at index " + std::to_string(x) + "p",
            direct[x * p] == full_budget, "V(" + std::to_string(x * p) + ")=" +
                std::to_string(direct[x * p]));
        add("staircase value at index " + std::to_string(x) + "p-l1",
            (x * p - l1 == 0 ? i64(0) : direct[x * p - l1]) == short_budget,
            "V(" + std::to_string(x * p - l1) + ")");

        bool up_ok = true;
        for (i64 a = 1; a <= x * p; ++a)
            if (direct[a] - direct[a - 1] > x) up_ok = false;
        add("steps up to index " + std::to_string(x) + "p bounded by " + std::to_string(x),
            up_ok, "");

        bool low_ok = true;
        for (i64 a = std::max<i64>(0, x * p - l1); a + 1 <= top_index; ++a)
            if (direct[a + 1] - direct[a] < x) low_ok = false;
        add("steps past index " + std::to_string(x) + "p-l1 at least " + std::to_string(x),
            low_ok, "");
    }

    if (p % 2 == 0)
        add("midpoint value, even total", direct[(2 * p - l1) / 2] == p / 2, "");
    else
        add("midpoint value, odd total", direct[(2 * p - l1 - 1) / 2] == (p - 1) / 2, "");

    const i64 mid = (p - l1) / 2;
    const i64 vmid = mid == 0 ? 0 : direct[mid];
    const bool partition = sigma.even_equal_partition();
    add("quarter-ratio value lower bound", 8 * vmid >= p - odd,
        "8V=" + std::to_string(8 * vmid) + " vs " + std::to_string(p - odd));
    add("lower bound tight iff even entries split evenly", (8 * vmid == p - odd) == partition,
        partition ? "split exists" : "no equal split");
    add("quarter-ratio value upper bound", 8 * vmid <= p + 3 * odd,
        "8V=" + std::to_string(8 * vmid) + " vs " + std::to_string(p + 3 * odd));

    return report;
}

}  // namespace lensbord

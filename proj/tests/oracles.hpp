// Brute-force oracles used across the test suites. Everything here is kept
// independent of the library's fast paths: plan search is plain recursion
// over item copy counts, and the E8 characteristic enumeration rederives the
// closed-form vector classes from the parity definition alone.
#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "lensbord/changemaker.hpp"
#include "lensbord/common.hpp"
#include "lensbord/e8.hpp"

namespace oracles {

using lensbord::i64;

// best[c] = max sigma . alpha over all plans with cost exactly c, then
// prefix-maxed so best[c] covers cost <= c. Plain item-by-item recursion;
// within a run of equal-value items only non-increasing copy counts are
// walked, since reordering copies among equal items changes neither the cost
// nor the value of a plan.
inline std::vector<i64> plan_optimum_sweep(const std::vector<i64>& sigma, i64 budget) {
    std::vector<i64> best(static_cast<std::size_t>(budget) + 1, 0);
    auto recurse = [&](auto&& self, std::size_t item, i64 prev_copies, i64 spent,
                       i64 points) -> void {
        if (points > best[spent]) best[spent] = points;
        if (item == sigma.size()) return;
        const bool same_run = item > 0 && sigma[item] == sigma[item - 1];
        i64 cost = 0;
        for (i64 copies = 0;; ++copies) {
            cost += copies;
            if (spent + cost > budget) break;
            if (same_run && copies > prev_copies) break;
            self(self, item + 1, copies, spent + cost, points + copies * sigma[item]);
        }
    };
    recurse(recurse, 0, std::numeric_limits<i64>::max(), 0, 0);
    for (i64 c = 1; c <= budget; ++c) best[c] = std::max(best[c], best[c - 1]);
    return best;
}

// Deterministic random changemakers: built in increasing order so the prefix
// condition holds by construction, bounded in weight and length.
inline std::vector<i64> random_changemaker(std::mt19937& rng, i64 p_cap, int dim_cap) {
    while (true) {
        std::vector<i64> inc = {1};
        i64 sum = 1, sumsq = 1;
        while (static_cast<int>(inc.size()) < dim_cap) {
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0 && inc.size() >= 2) break;
            const i64 hi = std::min<i64>(sum + 1, 12);
            const i64 next = std::uniform_int_distribution<i64>(inc.back(), hi)(rng);
            if (sumsq + next * next > p_cap) break;
            inc.push_back(next);
            sum += next;
            sumsq += next * next;
        }
        if (inc.size() < 2) continue;
        std::vector<i64> dec(inc.rbegin(), inc.rend());
        if (lensbord::is_changemaker(dec)) return dec;
    }
}

// --- E8 characteristic-vector enumeration --------------------------------

struct CharVector {
    std::array<i64, 8> e8_twice{};
    std::vector<i64> z;
    i64 norm = 0;  // -<c,c>
};

// Generators of the integer E8 model: the D8 part plus the half vector.
inline std::vector<std::array<i64, 8>> e8_generators_twice() {
    std::vector<std::array<i64, 8>> gens;
    for (int i = 0; i < 7; ++i) {
        std::array<i64, 8> g{};
        g[static_cast<std::size_t>(i)] = 2;
        g[static_cast<std::size_t>(i) + 1] = -2;
        gens.push_back(g);
    }
    std::array<i64, 8> plus{};
    plus[0] = 2;
    plus[1] = 2;
    gens.push_back(plus);
    std::array<i64, 8> half{};
    half.fill(1);
    gens.push_back(half);
    return gens;
}

// Lattice membership of a doubled-coordinate vector.
inline bool in_e8(const std::array<i64, 8>& twice) {
    bool all_even = true, all_odd = true;
    i64 sum = 0;
    for (i64 c : twice) {
        (c % 2 == 0 ? all_odd : all_even) = false;
        sum += c;
    }
    return (all_even || all_odd) && ((sum % 4) + 4) % 4 == 0;
}

// All characteristic vectors of -E8 (+) -Z^k with norm at most max_norm,
// found by scanning a coordinate box and testing <c,x> = <x,x> (mod 2) on
// the generators. Feasible for k <= 3 and small norms.
inline std::vector<CharVector> characteristic_up_to(i64 k, i64 max_norm) {
    std::vector<std::array<i64, 8>> e8_parts;
    std::array<i64, 8> cur{};
    const i64 box = 6;  // |twice| <= 6 covers norms up to 9 in the E8 part
    auto scan = [&](auto&& self, std::size_t pos, i64 sq) -> void {
        if (sq > 4 * max_norm) return;
        if (pos == 8) {
            if (!in_e8(cur)) return;
            bool characteristic = true;
            for (const auto& g : e8_generators_twice()) {
                i64 dot = 0, gnorm = 0;
                for (std::size_t i = 0; i < 8; ++i) {
                    dot += cur[i] * g[i];
                    gnorm += g[i] * g[i];
                }
                if (((dot / 4) - (gnorm / 4)) % 2 != 0) characteristic = false;
            }
            if (characteristic) e8_parts.push_back(cur);
            return;
        }
        for (i64 c = -box; c <= box; ++c) {
            cur[pos] = c;
            self(self, pos + 1, sq + c * c);
        }
    };
    scan(scan, 0, 0);

    // Z-part of a characteristic vector is all-odd; norms above max_norm are
    // discarded, so entries beyond +-(sqrt(max_norm)) cannot appear.
    std::vector<std::vector<i64>> z_parts;
    std::vector<i64> zcur(static_cast<std::size_t>(k), 0);
    auto zscan = [&](auto&& self, std::size_t pos) -> void {
        if (pos == static_cast<std::size_t>(k)) {
            z_parts.push_back(zcur);
            return;
        }
        for (i64 c = -5; c <= 5; c += 2) {
            zcur[pos] = c;
            self(self, pos + 1);
        }
    };
    zscan(zscan, 0);

    std::vector<CharVector> out;
    for (const auto& e : e8_parts)
        for (const auto& z : z_parts) {
            i64 norm = 0;
            for (i64 c : e) norm += c * c;
            norm /= 4;
            for (i64 c : z) norm += c * c;
            if (norm <= max_norm) out.push_back({e, z, norm});
        }
    return out;
}

}  // namespace oracles

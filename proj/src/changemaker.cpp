#include "lensbord/changemaker.hpp"

#include <algorithm>
#include <functional>

namespace lensbord {

namespace {

void require_positive(std::span<const i64> entries) {
    if (entries.empty()) fail(errc::invalid_argument, "empty vector");
    for (i64 e : entries)
        if (e < 1) fail(errc::invalid_argument, "entries must be positive integers");
}

}  // namespace

bool is_changemaker(std::span<const i64> entries) {
    require_positive(entries);
    std::vector<i64> sorted(entries.begin(), entries.end());
    std::sort(sorted.begin(), sorted.end());
    i64 reach = 0;
    for (i64 e : sorted) {
        if (e > reach + 1) return false;
        reach += e;
    }
    return true;
}

std::set<i64> reachable_sums(std::span<const i64> entries) {
    require_positive(entries);
    if (entries.size() > 25) fail(errc::capacity, "subset-sum oracle limited to 25 entries");
    std::set<i64> sums;
    const std::size_t n = entries.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        i64 s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) s += entries[i];
        sums.insert(s);
    }
    return sums;
}

Changemaker::Changemaker(std::vector<i64> entries) : entries_(std::move(entries)) {
    if (!is_changemaker(entries_))
        fail(errc::invalid_argument, "vector does not satisfy the changemaker condition");
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
    for (i64 e : entries_) {
        p_ += e * e;
        l1_ += e;
        if (e % 2 != 0) ++odd_;
    }
}

bool Changemaker::even_equal_partition() const {
    i64 even_total = 0;
    std::vector<i64> evens;
    for (i64 e : entries_)
        if (e % 2 == 0) {
            evens.push_back(e);
            even_total += e;
        }
    if (even_total % 2 != 0) return false;
    const i64 half = even_total / 2;
    std::vector<char> hit(static_cast<std::size_t>(half) + 1, 0);
    hit[0] = 1;
    for (i64 e : evens)
        for (i64 s = half; s >= e; --s)
            if (hit[s - e]) hit[s] = 1;
    return hit[half] != 0;
}

}  // namespace lensbord

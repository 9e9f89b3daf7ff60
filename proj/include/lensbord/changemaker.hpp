#pragma once

#include <set>
#include <span>
#include <vector>

#include "lensbord/common.hpp"

namespace lensbord {

/// Tests the defining subset-sum reachability condition: every integer in
/// [0, sum of entries] must be a subset sum. Entries may come in any order;
/// all must be >= 1. Equivalent fast form: after sorting increasingly, each
/// entry is at most 1 + (sum of the entries before it).
bool is_changemaker(std::span<const i64> entries);

/// Exact set of subset sums by full enumeration. Exponential; refuses more
/// than 25 entries. Kept as the independent oracle for is_changemaker.
std::set<i64> reachable_sums(std::span<const i64> entries);

/// Positive integer vector with the changemaker property, stored
/// non-increasing. Immutable after construction.
class Changemaker {
public:
    explicit Changemaker(std::vector<i64> entries);

    const std::vector<i64>& entries() const { return entries_; }
    i64 dim() const { return static_cast<i64>(entries_.size()); }

    i64 p() const { return p_; }        // sum of squares
    i64 l1() const { return l1_; }      // sum of entries
    i64 odd_count() const { return odd_; }

    /// Whether the multiset of even entries splits into two equal-sum halves.
    /// No even entries counts as a trivial (0 vs 0) split.
    bool even_equal_partition() const;

    friend bool operator==(const Changemaker& a, const Changemaker& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator<(const Changemaker& a, const Changemaker& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<i64> entries_;
    i64 p_ = 0;
    i64 l1_ = 0;
    i64 odd_ = 0;
};

}  // namespace lensbord

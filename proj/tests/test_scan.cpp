#include <doctest.h>

#include <set>

#include "lensbord/scan.hpp"

using namespace lensbord;

namespace {

std::set<i64> slopes_found(const ScanReport& report) {
    std::set<i64> out;
    for (const auto& leg : report.legs)
        for (const auto& c : leg.candidates) out.insert(c.slope);
    return out;
}

}  // namespace

TEST_CASE("scan finds the five known cobordant slopes of the trefoil") {
    VSequence v = torsion_coeffs(torus_alexander(2, 3));
    ScanReport report = scan(v, 3, 12, 1);
    // 5 and 7 are lens surgeries, 4 and 9 bound rational balls, and the
    // 8-surgery is cobordant to the (2,1) lens space.
    CHECK(slopes_found(report) == std::set<i64>{4, 5, 7, 8, 9});
    for (const auto& leg : report.legs)
        for (const auto& c : leg.candidates) {
            if (c.slope == 8) {
                CHECK(c.sigma == std::vector<i64>{1, 1});
                REQUIRE(c.realizations.size() == 1);
                CHECK(c.realizations[0].p == 2);
                CHECK(c.realizations[0].q == 1);
            }
            if (c.slope == 5) CHECK(c.sigma == std::vector<i64>{2, 1});
        }
}

TEST_CASE("scan finds the five known cobordant slopes of T(3,4)") {
    VSequence v = torsion_coeffs(torus_alexander(3, 4));
    ScanReport report = scan(v, 4, 14, 1);
    CHECK(slopes_found(report) == std::set<i64>{9, 11, 12, 13, 16});
    // the 12-surgery sits over the (3,2) lens space
    bool found = false;
    for (const auto& leg : report.legs)
        for (const auto& c : leg.candidates)
            if (c.slope == 12)
                for (const auto& r : c.realizations)
                    found = found || (r.p == 3 && r.q == 2);
    CHECK(found);
}

TEST_CASE("scan skips the unbounded leg without a p bound") {
    VSequence v = torsion_coeffs(torus_alexander(2, 3));
    ScanReport report = scan(v, 2, std::nullopt, 1);
    REQUIRE_FALSE(report.legs.empty());
    CHECK(report.legs[0].r == 1);
    CHECK(report.legs[0].skipped);
    for (std::size_t i = 1; i < report.legs.size(); ++i) CHECK_FALSE(report.legs[i].skipped);
}

TEST_CASE("scan candidate counts respect the per-leg bounds") {
    for (i64 q : {3, 5, 7, 9, 11}) {
        VSequence v = torsion_coeffs(torus_alexander(2, q));
        ScanReport report = scan(v, 4, 40, 1);
        for (const auto& leg : report.legs) {
            INFO("q=", q, " r=", leg.r);
            CHECK(static_cast<int>(leg.candidates.size()) <= count_bound(leg.r));
        }
    }
}

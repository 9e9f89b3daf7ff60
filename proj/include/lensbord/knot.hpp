#pragma once

#include <optional>
#include <vector>

#include "lensbord/common.hpp"

namespace lensbord {

/// Symmetric Laurent polynomial with integer coefficients, stored on the
/// exponent range [-degree, degree].
class LaurentPoly {
public:
    LaurentPoly(std::vector<i64> coeffs, i64 degree);

    i64 degree() const { return degree_; }
    i64 coeff(i64 exponent) const;
    const std::vector<i64>& coeffs() const { return coeffs_; }  // index 0 = exponent -degree

private:
    std::vector<i64> coeffs_;
    i64 degree_;
};

/// Symmetrized Alexander polynomial of the (p,q) torus knot via exact
/// polynomial division of (T^{pq}-1)(T-1) by (T^p-1)(T^q-1).
LaurentPoly torus_alexander(i64 p, i64 q);

/// Non-increasing, non-negative, eventually-zero integer sequence whose
/// consecutive steps are 0 or 1. Indices past the stored range read 0.
class VSequence {
public:
    explicit VSequence(std::vector<i64> values);

    i64 at(i64 index) const;
    i64 nu_plus() const { return nu_plus_; }  // first index with value 0
    const std::vector<i64>& values() const { return values_; }

private:
    std::vector<i64> values_;  // trailing zeros trimmed
    i64 nu_plus_ = 0;
};

/// Torsion coefficients t_i = sum_{j>=1} j*a_{i+j} of a symmetric polynomial,
/// for i = 0..degree. Rejects outputs that fail the VSequence axioms.
VSequence torsion_coeffs(const LaurentPoly& poly);

enum class Parity { odd, even };

/// The subsequence of a V-sequence visible at a fixed spacing r: samples at
/// indices r/2 + ir (r even with p odd) or ir (otherwise), together with the
/// derived counting function and step minimum.
class RelevantView {
public:
    RelevantView(const VSequence& v, int r, Parity p_parity);

    int r() const { return r_; }
    Parity p_parity() const { return p_parity_; }
    bool parity_used() const { return r_ % 2 == 0; }
    i64 offset() const { return offset_; }

    i64 value(i64 index) const;                // V^rel at index >= 0
    i64 first_value() const;                   // V^rel_0
    i64 nu_plus_rel() const { return nu_plus_rel_; }
    i64 count_at_most(i64 m) const;            // T^rel_m
    std::optional<i64> mu() const { return mu_; }

    /// Strict lower/upper bounds on |{i : m1 >= V_i > m2}| implied by the
    /// relevant counts: the true count lies strictly between them.
    std::pair<i64, i64> conversion_window(i64 m1, i64 m2) const;

private:
    int r_;
    Parity p_parity_;
    i64 offset_;
    std::vector<i64> nonzero_;  // strictly positive relevant values, non-increasing
    i64 nu_plus_rel_ = 0;
    std::optional<i64> mu_;
};

}  // namespace lensbord

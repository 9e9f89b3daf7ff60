#include "lensbord/knot.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace lensbord {

namespace {

// Dense polynomial in T with integer coefficients, index = exponent.
using Poly = std::vector<i64>;

Poly mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division by T^k - 1.
Poly div_by_tk_minus_1(const Poly& a, i64 k) {
    Poly rem = a;
    Poly quot(a.size() - static_cast<std::size_t>(k), 0);
    for (i64 d = static_cast<i64>(rem.size()) - 1; d >= k; --d) {
        i64 c = rem[d];
        if (c == 0) continue;
        quot[d - k] = c;
        rem[d] = 0;
        rem[d - k] += c;
    }
    for (i64 c : rem)
        if (c != 0) fail(errc::invalid_argument, "polynomial division left a remainder");
    return quot;
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<i64> coeffs, i64 degree)
    : coeffs_(std::move(coeffs)), degree_(degree) {
    if (degree_ < 0 || coeffs_.size() != static_cast<std::size_t>(2 * degree_ + 1))
        fail(errc::invalid_argument, "coefficient span does not match the degree");
}

i64 LaurentPoly::coeff(i64 exponent) const {
    if (exponent < -degree_ || exponent > degree_) return 0;
    return coeffs_[static_cast<std::size_t>(exponent + degree_)];
}

LaurentPoly torus_alexander(i64 p, i64 q) {
    if (p < 2 || q < 2) fail(errc::invalid_argument, "torus parameters must be at least 2");
    if (std::gcd(p, q) != 1) fail(errc::invalid_argument, "torus parameters must be coprime");

    Poly numerator(static_cast<std::size_t>(p * q) + 1, 0);
    numerator[0] = 1;
    numerator[static_cast<std::size_t>(p * q)] = -1;  // -(T^{pq} - 1)
    Poly t_minus_1 = {-1, 1};
    Poly num = mul(numerator, t_minus_1);  // (1 - T^{pq})(T - 1) = (T^{pq}-1)(1-T)
    // Two exact divisions; the sign conventions cancel.
    Poly quot = div_by_tk_minus_1(div_by_tk_minus_1(num, p), q);
    // quot now equals -(T^{pq}-1)(T-1)/((T^p-1)(T^q-1)); flip the sign.
    for (i64& c : quot) c = -c;

    const i64 g = (p - 1) * (q - 1) / 2;
    if (static_cast<i64>(quot.size()) != 2 * g + 1)
        fail(errc::invalid_argument, "unexpected symmetrized degree");
    return LaurentPoly(std::move(quot), g);
}

VSequence::VSequence(std::vector<i64> values) : values_(std::move(values)) {
    while (!values_.empty() && values_.back() == 0) values_.pop_back();
    i64 prev = -1;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] <= 0)
            fail(errc::invalid_argument, "interior values must be positive");
        if (i > 0 && (values_[i] > prev || prev - values_[i] > 1))
            fail(errc::invalid_argument, "sequence must decrease by steps of 0 or 1");
        prev = values_[i];
    }
    if (!values_.empty() && values_.back() > 1)
        fail(errc::invalid_argument, "sequence must reach 0 by a step of at most 1");
    nu_plus_ = static_cast<i64>(values_.size());
}

i64 VSequence::at(i64 index) const {
    if (index < 0) fail(errc::invalid_argument, "negative index");
    if (index >= static_cast<i64>(values_.size())) return 0;
    return values_[static_cast<std::size_t>(index)];
}

VSequence torsion_coeffs(const LaurentPoly& poly) {
    const i64 g = poly.degree();
    for (i64 j = 1; j <= g; ++j)
        if (poly.coeff(j) != poly.coeff(-j))
            fail(errc::invalid_argument, "polynomial is not symmetric");
    std::vector<i64> t(static_cast<std::size_t>(g) + 1, 0);
    for (i64 i = 0; i <= g; ++i)
        for (i64 j = 1; i + j <= g; ++j) t[static_cast<std::size_t>(i)] += j * poly.coeff(i + j);
    return VSequence(std::move(t));
}

RelevantView::RelevantView(const VSequence& v, int r, Parity p_parity)
    : r_(r), p_parity_(p_parity) {
    if (r < 1) fail(errc::invalid_argument, "spacing must be at least 1");
    offset_ = (r % 2 == 0 && p_parity == Parity::odd) ? r / 2 : 0;
    for (i64 i = offset_;; i += r) {
        i64 val = v.at(i);
        if (val == 0) break;
        nonzero_.push_back(val);
    }
    nu_plus_rel_ = static_cast<i64>(nonzero_.size());
    if (!nonzero_.empty() && nonzero_[0] >= 2) {
        i64 best = std::numeric_limits<i64>::max();
        for (i64 m = 1; m < nonzero_[0]; ++m)
            best = std::min(best, count_at_most(m) - count_at_most(m - 1));
        mu_ = best;
    }
}

i64 RelevantView::value(i64 index) const {
    if (index < 0) fail(errc::invalid_argument, "negative index");
    if (index >= nu_plus_rel_) return 0;
    return nonzero_[static_cast<std::size_t>(index)];
}

i64 RelevantView::first_value() const { return nonzero_.empty() ? 0 : nonzero_[0]; }

i64 RelevantView::count_at_most(i64 m) const {
    // Number of indices i < nu_plus_rel with 0 < value(i) <= m; the stored
    // values are non-increasing, so that is a suffix.
    auto it = std::lower_bound(nonzero_.begin(), nonzero_.end(), m, std::greater<i64>());
    return nu_plus_rel_ - static_cast<i64>(it - nonzero_.begin());
}

std::pair<i64, i64> RelevantView::conversion_window(i64 m1, i64 m2) const {
    if (m1 <= m2 || m2 < 0) fail(errc::invalid_argument, "window requires m1 > m2 >= 0");
    const i64 diff = count_at_most(m1) - count_at_most(m2);
    return {(diff - 1) * r_, (diff + 1) * r_};
}

}  // namespace lensbord

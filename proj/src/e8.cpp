#include "lensbord/e8.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace lensbord {
namespace e8 {

namespace {

constexpr i64 kMaxZ = 20;

void require_k(i64 k) {
    if (k < 0) fail(errc::invalid_argument, "Z-rank must be non-negative");
    if (k > kMaxZ) fail(errc::capacity, "enumeration limited to Z-rank 20");
}

}  // namespace

E8Vector E8Vector::from_twice(std::array<i64, 8> t) {
    bool all_even = true, all_odd = true;
    i64 sum = 0, sq = 0;
    for (i64 c : t) {
        if (c % 2 == 0)
            all_odd = false;
        else
            all_even = false;
        sum += c;
        sq += c * c;
    }
    if (!(all_even || all_odd))
        fail(errc::invalid_argument, "coordinates must be all integers or all half-integers");
    if (((sum % 4) + 4) % 4 != 0)
        fail(errc::invalid_argument, "coordinate sum must be an even integer");
    if (sq % 4 != 0) fail(errc::invalid_argument, "vector is not in the lattice");
    E8Vector v;
    v.twice = t;
    return v;
}

bool E8Vector::is_zero() const {
    return std::all_of(twice.begin(), twice.end(), [](i64 c) { return c == 0; });
}

i64 E8Vector::norm() const {
    i64 sq = 0;
    for (i64 c : twice) sq += c * c;
    return sq / 4;
}

i64 E8Vector::pair(const E8Vector& a, const E8Vector& b) {
    i64 dot = 0;
    for (std::size_t i = 0; i < 8; ++i) dot += a.twice[i] * b.twice[i];
    return -dot / 4;
}

const std::vector<E8Vector>& roots() {
    static const std::vector<E8Vector> table = [] {
        std::vector<E8Vector> out;
        // Integer roots: +-e_i +- e_j.
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i + 1; j < 8; ++j)
                for (i64 si : {-2, 2})
                    for (i64 sj : {-2, 2}) {
                        std::array<i64, 8> t{};
                        t[i] = si;
                        t[j] = sj;
                        out.push_back(E8Vector::from_twice(t));
                    }
        // Half-integer roots: all +-1/2 with coordinate sum even.
        for (int mask = 0; mask < 256; ++mask) {
            std::array<i64, 8> t{};
            i64 sum = 0;
            for (int b = 0; b < 8; ++b) {
                t[static_cast<std::size_t>(b)] = (mask >> b) & 1 ? -1 : 1;
                sum += t[static_cast<std::size_t>(b)];
            }
            if (((sum % 4) + 4) % 4 == 0) out.push_back(E8Vector::from_twice(t));
        }
        return out;
    }();
    return table;
}

std::vector<i64> pi_set(i64 a, i64 b) {
    if (a > b) fail(errc::invalid_argument, "need a <= b");
    if (((a - b) % 2) != 0) fail(errc::invalid_argument, "endpoints must share a parity");
    std::vector<i64> out;
    for (i64 v = a; v <= b; v += 2) out.push_back(v);
    return out;
}

std::vector<LatticeVector> short_set(i64 k) {
    require_k(k);
    std::vector<LatticeVector> out;
    const std::size_t total = std::size_t(1) << k;
    out.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask) {
        LatticeVector v;
        v.z.resize(static_cast<std::size_t>(k));
        for (i64 b = 0; b < k; ++b)
            v.z[static_cast<std::size_t>(b)] = (mask >> b) & 1 ? -1 : 1;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<LatticeVector> Short_set(i64 k) {
    require_k(k);
    std::vector<LatticeVector> out;
    for (const E8Vector& root : roots()) {
        E8Vector doubled;
        for (std::size_t i = 0; i < 8; ++i) doubled.twice[i] = 2 * root.twice[i];
        for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
            LatticeVector v;
            v.e8 = doubled;
            v.z.resize(static_cast<std::size_t>(k));
            for (i64 b = 0; b < k; ++b)
                v.z[static_cast<std::size_t>(b)] = (mask >> b) & 1 ? -1 : 1;
            out.push_back(std::move(v));
        }
    }
    for (i64 pos = 0; pos < k; ++pos)
        for (i64 big : {-3, 3})
            for (std::size_t mask = 0; mask < (std::size_t(1) << (k - 1)); ++mask) {
                LatticeVector v;
                v.z.resize(static_cast<std::size_t>(k));
                std::size_t bit = 0;
                for (i64 i = 0; i < k; ++i) {
                    if (i == pos) {
                        v.z[static_cast<std::size_t>(i)] = big;
                    } else {
                        v.z[static_cast<std::size_t>(i)] = (mask >> bit) & 1 ? -1 : 1;
                        ++bit;
                    }
                }
                out.push_back(std::move(v));
            }
    return out;
}

Tau::Tau(E8Vector s_part, std::vector<i64> sigma_part)
    : s(s_part), sigma(std::move(sigma_part)) {
    for (i64 e : sigma)
        if (e < 0) fail(errc::invalid_argument, "sigma part must be non-negative");
    std::sort(sigma.begin(), sigma.end(), std::greater<>());
}

i64 Tau::p() const {
    i64 total = s.norm();
    for (i64 e : sigma) total += e * e;
    return total;
}

namespace {

i64 sigma_l1(const Tau& tau) {
    i64 l1 = 0;
    for (i64 e : tau.sigma) l1 += e;
    return l1;
}

// All values of the form sum of +-sigma_i, as a sorted set.
std::set<i64> signed_sums(const std::vector<i64>& sigma) {
    std::set<i64> vals = {0};
    for (i64 e : sigma) {
        std::set<i64> next;
        for (i64 v : vals) {
            next.insert(v + e);
            next.insert(v - e);
        }
        vals = std::move(next);
    }
    return vals;
}

}  // namespace

PairingMax pairing_max(const Tau& tau) {
    require_k(static_cast<i64>(tau.sigma.size()));
    PairingMax out;
    out.c = sigma_l1(tau);  // best +-1 pattern against a non-negative sigma

    // Short pairings split over the two classes; each maximizes separately.
    i64 best_root = std::numeric_limits<i64>::min();
    for (const E8Vector& root : roots()) {
        E8Vector doubled;
        for (std::size_t i = 0; i < 8; ++i) doubled.twice[i] = 2 * root.twice[i];
        best_root = std::max(best_root, E8Vector::pair(doubled, tau.s));
    }
    i64 best = best_root + out.c;
    if (!tau.sigma.empty()) {
        // One coordinate weighted 3: best with the weight on a largest entry.
        best = std::max(best, out.c + 2 * tau.sigma.front());
    }
    out.C = best;
    return out;
}

bool is_e8_changemaker(const Tau& tau) {
    require_k(static_cast<i64>(tau.sigma.size()));
    const PairingMax maxima = pairing_max(tau);
    const i64 l1 = sigma_l1(tau);

    // Condition on short pairings: {<c,tau>} = full parity interval [-c, c].
    // Pairings against {0} (+) {+-1}^k are exactly the signed sigma sums.
    const std::set<i64> plain = signed_sums(tau.sigma);
    if (maxima.c != l1) return false;
    for (i64 v = -l1; v <= l1; v += 2)
        if (!plain.count(v)) return false;

    if (maxima.C < maxima.c + 2) return true;  // nothing left to cover

    // Short pairing values: doubled-root pairings shifted by signed sums,
    // plus the weight-3 patterns.
    std::set<i64> covered;
    std::set<i64> root_vals;
    for (const E8Vector& root : roots()) {
        E8Vector doubled;
        for (std::size_t i = 0; i < 8; ++i) doubled.twice[i] = 2 * root.twice[i];
        root_vals.insert(E8Vector::pair(doubled, tau.s));
    }
    for (i64 rv : root_vals)
        for (i64 sv : plain) covered.insert(rv + sv);
    for (std::size_t j = 0; j < tau.sigma.size(); ++j) {
        std::vector<i64> rest = tau.sigma;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        for (i64 sv : signed_sums(rest))
            for (i64 w : {-3, 3}) covered.insert(sv + w * tau.sigma[j]);
    }
    for (i64 v = maxima.c + 2; v <= maxima.C; v += 2)
        if (!covered.count(v)) return false;
    return true;
}

SurgeryHome classify_poincare(i64 g, i64 r, i64 p) {
    if (g < 0 || r < 1 || p < 1) fail(errc::invalid_argument, "need g >= 0, r >= 1, p >= 1");
    const i64 threshold = p % 2 != 0 ? 2 * g + r : 2 * g;
    return r * r * p >= threshold ? SurgeryHome::poincare : SurgeryHome::s3;
}

}  // namespace e8
}  // namespace lensbord

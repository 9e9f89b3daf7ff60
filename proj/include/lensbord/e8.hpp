#pragma once

#include <array>
#include <vector>

#include "lensbord/common.hpp"

namespace lensbord {
namespace e8 {

/// Vector in the integer model of the E8 lattice, stored as doubled
/// coordinates so half-integers stay exact: coordinates are all even or all
/// odd, and their sum is divisible by 4.
struct E8Vector {
    std::array<i64, 8> twice{};

    static E8Vector from_twice(std::array<i64, 8> t);
    bool is_zero() const;
    /// Positive norm in the negated lattice: -<v,v> = sum of squares / 4.
    i64 norm() const;
    /// -<a,b> for the negated pairing.
    static i64 pair(const E8Vector& a, const E8Vector& b);
};

/// The 240 roots (norm 2) of the integer model.
const std::vector<E8Vector>& roots();

/// Element of -E8 (+) -Z^k with the Z-part written out explicitly.
struct LatticeVector {
    E8Vector e8;
    std::vector<i64> z;
};

/// All integers from a to b with their common parity.
std::vector<i64> pi_set(i64 a, i64 b);

/// Characteristic vectors of maximal norm in -E8 (+) -Z^k: the zero E8 part
/// with every Z coordinate +-1.
std::vector<LatticeVector> short_set(i64 k);

/// Characteristic vectors of norm 8 below maximal: doubled roots over +-1
/// coordinates, plus the zero E8 part with a single +-3 coordinate.
std::vector<LatticeVector> Short_set(i64 k);

/// The candidate vector tau = (s, sigma): an E8 part plus a non-negative
/// integer part, sigma stored non-increasing. Entries of sigma may be 0.
struct Tau {
    E8Vector s;
    std::vector<i64> sigma;

    Tau(E8Vector s_part, std::vector<i64> sigma_part);
    i64 p() const;  // -<tau,tau>
};

struct PairingMax {
    i64 c = 0;  // max pairing against short_set
    i64 C = 0;  // max pairing against Short_set
};

/// Exact maxima of <c, tau> over the two characteristic classes.
PairingMax pairing_max(const Tau& tau);

/// Both defining conditions, checked against the enumerated pairing values:
/// the short pairings must fill the full parity interval [-c, c], and every
/// parity-correct value in [c+2, C] must be a Short pairing.
bool is_e8_changemaker(const Tau& tau);

enum class SurgeryHome { poincare, s3 };

/// Threshold test: slope r^2 p against 2g + r (p odd) or 2g (p even).
SurgeryHome classify_poincare(i64 g, i64 r, i64 p);

}  // namespace e8
}  // namespace lensbord

#pragma once

#include <optional>
#include <vector>

#include "lensbord/changemaker.hpp"
#include "lensbord/common.hpp"

namespace lensbord {

/// Negative continued fraction coefficients of p/q: p/q = a1 - 1/(a2 - ...),
/// every a_i >= 2. Empty for p = 1.
struct HJExpansion {
    i64 p = 1;
    i64 q = 0;
    std::vector<i64> coeffs;
};

HJExpansion hj_expansion(i64 p, i64 q);

/// Evaluates the continued fraction back to a fraction (num, den) in lowest
/// terms; the round-trip oracle for hj_expansion.
std::pair<i64, i64> hj_evaluate(const std::vector<i64>& coeffs);

using GramMatrix = std::vector<std::vector<i64>>;

/// Tridiagonal Gram matrix with diagonal -a_i and off-diagonal 1.
GramMatrix linear_gram(const HJExpansion& e);

/// Exact integer determinant (Bareiss elimination).
i64 gram_det(const GramMatrix& g);

bool is_negative_definite(const GramMatrix& g);

/// Integer basis of the orthogonal complement of sigma in Z^{n+1}, as rows.
/// Rank is dim(sigma)-1 and the induced negative-definite Gram has
/// |det| = sum of squares of sigma.
std::vector<std::vector<i64>> complement_basis(const Changemaker& sigma);

/// Gram matrix of row vectors under the negated standard pairing.
GramMatrix rows_gram(const std::vector<std::vector<i64>>& rows);

/// Vertex vectors x_1..x_n in Z^{n+1} realizing the linear lattice of
/// (p, q) inside the orthogonal complement of sigma: |x_i|^2 = a_i,
/// x_i . x_{i+1} = -1, distant pairs orthogonal, every x_i . sigma = 0.
/// Backtracking search; absent when no embedding exists.
std::optional<std::vector<std::vector<i64>>> embed_linear(const Changemaker& sigma, i64 p,
                                                          i64 q);

struct Realization {
    i64 p = 0;
    i64 q = 0;       // canonical representative, min(q, q') with qq' = 1 mod p
    i64 q_dual = 0;  // the other representative
    std::vector<std::vector<i64>> vertices;
};

/// All lens parameters (p, q) whose linear lattice embeds as the orthogonal
/// complement of sigma, p fixed at sum of squares. Output is canonicalized
/// to min(q, q') and sorted; the trivial sigma = (1) reports (1, 0).
/// Reducedness of the lens space is not checked here.
std::vector<Realization> realize(const Changemaker& sigma, int threads = 1);

}  // namespace lensbord

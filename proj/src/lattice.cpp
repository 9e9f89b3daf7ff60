#include "lensbord/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace lensbord {

HJExpansion hj_expansion(i64 p, i64 q) {
    if (p < 1) fail(errc::invalid_argument, "p must be positive");
    if (p == 1) return HJExpansion{1, q, {}};  // S^3 convention
    if (q < 1 || q >= p) fail(errc::invalid_argument, "need 0 < q < p");
    if (std::gcd(p, q) != 1) fail(errc::invalid_argument, "p and q must be coprime");
    HJExpansion e{p, q, {}};
    i64 a = p, b = q;
    while (b > 0) {
        const i64 c = (a + b - 1) / b;  // ceiling
        e.coeffs.push_back(c);
        const i64 next = c * b - a;
        a = b;
        b = next;
    }
    return e;
}

std::pair<i64, i64> hj_evaluate(const std::vector<i64>& coeffs) {
    i64 num = 1, den = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        // value <- a - 1/value, with 1/0 read as infinity at the start
        const i64 n2 = *it * num - den;
        den = num;
        num = n2;
    }
    const i64 g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
    if (g > 1) return {num / g, den / g};
    return {num, den};
}

GramMatrix linear_gram(const HJExpansion& e) {
    const std::size_t n = e.coeffs.size();
    GramMatrix g(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        g[i][i] = -e.coeffs[i];
        if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = 1;
    }
    return g;
}

i64 gram_det(const GramMatrix& g) {
    const std::size_t n = g.size();
    if (n == 0) return 1;
    using big = __int128;
    std::vector<std::vector<big>> m(n, std::vector<big>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = g[i][j];
    big prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return static_cast<i64>(sign * m[n - 1][n - 1]);
}

bool is_negative_definite(const GramMatrix& g) {
    // Leading principal minors must alternate in sign, starting negative.
    for (std::size_t k = 1; k <= g.size(); ++k) {
        GramMatrix lead(k, std::vector<i64>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = g[i][j];
        const i64 d = gram_det(lead);
        if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
    }
    return true;
}

std::vector<std::vector<i64>> complement_basis(const Changemaker& sigma) {
    // Work on the increasing view eps_1 <= ... <= eps_N; for each k >= 2 pick
    // a subset of the earlier entries summing to eps_k (greedy from the
    // largest), or fall back to the tight form using the forced 1 up front.
    std::vector<i64> inc(sigma.entries().rbegin(), sigma.entries().rend());
    const std::size_t n = inc.size();
    std::vector<std::vector<i64>> rows;
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<i64> row(n, 0);
        row[k] = -1;
        i64 need = inc[k];
        i64 prefix = 0;
        for (std::size_t j = 0; j < k; ++j) prefix += inc[j];
        if (need <= prefix) {
            for (std::size_t j = k; j-- > 0 && need > 0;)
                if (inc[j] <= need) {
                    row[j] = 1;
                    need -= inc[j];
                }
        } else {
            // eps_k = prefix + 1: take everything and the smallest entry twice
            for (std::size_t j = 0; j < k; ++j) row[j] = 1;
            row[0] += 1;
            need = 0;
        }
        if (need != 0) fail(errc::invalid_argument, "no subset certificate found");
        // Store coordinates in the non-increasing order used everywhere else.
        std::vector<i64> stored(row.rbegin(), row.rend());
        rows.push_back(std::move(stored));
    }
    return rows;
}

GramMatrix rows_gram(const std::vector<std::vector<i64>>& rows) {
    const std::size_t n = rows.size();
    GramMatrix g(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            i64 dot = 0;
            for (std::size_t t = 0; t < rows[i].size(); ++t) dot += rows[i][t] * rows[j][t];
            g[i][j] = -dot;
        }
    return g;
}

namespace {

// Counts of vectors at each squared length 1..max_norm in a positive
// definite integer form (the negated Gram), by Fincke-Pohst enumeration over
// the U^T D U decomposition. Exact integer evaluation at the leaves; the
// floating-point bounds only over-enumerate.
std::vector<i64> short_vector_counts(const GramMatrix& gram, i64 max_norm) {
    const std::size_t n = gram.size();
    std::vector<i64> counts(static_cast<std::size_t>(max_norm) + 1, 0);
    if (n == 0) return counts;
    std::vector<std::vector<double>> pos(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pos[i][j] = static_cast<double>(-gram[i][j]);
    std::vector<std::vector<double>> u(n, std::vector<double>(n, 0.0));
    std::vector<double> d(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double diag = pos[i][i];
        for (std::size_t k = 0; k < i; ++k) diag -= d[k] * u[k][i] * u[k][i];
        d[i] = diag;
        u[i][i] = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double val = pos[i][j];
            for (std::size_t k = 0; k < i; ++k) val -= d[k] * u[k][i] * u[k][j];
            u[i][j] = val / d[i];
        }
    }
    std::vector<i64> x(n, 0);
    auto descend = [&](auto&& self, std::size_t idx, double used) -> void {
        const std::size_t i = idx - 1;
        double center = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) center += u[i][j] * static_cast<double>(x[j]);
        const double radius = std::sqrt(std::max(0.0, (max_norm - used) / d[i])) + 1e-9;
        const i64 lo = static_cast<i64>(std::ceil(-center - radius));
        const i64 hi = static_cast<i64>(std::floor(-center + radius));
        for (i64 c = lo; c <= hi; ++c) {
            x[i] = c;
            const double term = d[i] * (c + center) * (c + center);
            if (i == 0) {
                i64 q = 0;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) q += -gram[a][b] * x[a] * x[b];
                if (q >= 1 && q <= max_norm) ++counts[static_cast<std::size_t>(q)];
            } else {
                self(self, i, used + term);
            }
        }
        x[i] = 0;
    };
    descend(descend, n, 0.0);
    return counts;
}

// Same counts for the orthogonal complement of sigma inside Z^{n+1}.
std::vector<i64> complement_short_counts(const Changemaker& sigma, i64 max_norm) {
    return short_vector_counts(rows_gram(complement_basis(sigma)), max_norm);
}

class EmbedSearch {
public:
    EmbedSearch(const std::vector<i64>& sigma, const std::vector<i64>& norms)
        : sigma_(sigma), norms_(norms), dim_(sigma.size()) {
        sigma_suffix_.resize(dim_ + 1, 0);
        for (std::size_t i = dim_; i-- > 0;)
            sigma_suffix_[i] = sigma_suffix_[i + 1] + sigma_[i] * sigma_[i];
    }

    std::optional<std::vector<std::vector<i64>>> run() {
        placed_.clear();
        placed_suffix_.clear();
        if (place(0)) return placed_;
        return std::nullopt;
    }

private:
    static bool dot_reachable(i64 partial, i64 target, i64 left_sq, i64 suffix_sq) {
        // Cauchy-Schwarz: the remaining coordinates can move the dot by at
        // most sqrt(left_sq * suffix_sq).
        const i64 gap = target - partial;
        return i64(gap) * gap <= left_sq * suffix_sq;
    }

    bool place(std::size_t level) {
        if (level == norms_.size()) return true;
        std::vector<i64> vec(dim_, 0);
        std::vector<i64> dots(placed_.size(), 0);
        return search_coord(level, vec, dots, 0, norms_[level], 0, true);
    }

    bool search_coord(std::size_t level, std::vector<i64>& vec, std::vector<i64>& dots,
                      std::size_t pos, i64 left, i64 sigma_dot, bool still_zero) {
        if (pos == dim_) {
            if (left != 0 || sigma_dot != 0) return false;
            for (std::size_t prev = 0; prev < placed_.size(); ++prev)
                if (dots[prev] != (prev + 1 == level ? -1 : 0)) return false;
            placed_.push_back(vec);
            push_suffix(vec);
            if (place(level + 1)) return true;
            placed_.pop_back();
            placed_suffix_.pop_back();
            return false;
        }
        i64 bound = 0;
        while ((bound + 1) * (bound + 1) <= left) ++bound;
        for (i64 c = -bound; c <= bound; ++c) {
            if (still_zero && level == 0 && c < 0) continue;  // global sign fixed on x_1
            const i64 left2 = left - c * c;
            const i64 sdot = sigma_dot + c * sigma_[pos];
            if (!dot_reachable(sdot, 0, left2, sigma_suffix_[pos + 1])) continue;
            for (std::size_t prev = 0; prev < placed_.size(); ++prev)
                dots[prev] += c * placed_[prev][pos];
            bool feasible = true;
            for (std::size_t prev = 0; prev < placed_.size() && feasible; ++prev)
                if (!dot_reachable(dots[prev], prev + 1 == level ? -1 : 0, left2,
                                   placed_suffix_[prev][pos + 1]))
                    feasible = false;
            if (feasible) {
                vec[pos] = c;
                if (search_coord(level, vec, dots, pos + 1, left2, sdot, still_zero && c == 0))
                    return true;
                vec[pos] = 0;
            }
            for (std::size_t prev = 0; prev < placed_.size(); ++prev)
                dots[prev] -= c * placed_[prev][pos];
        }
        return false;
    }

    void push_suffix(const std::vector<i64>& vec) {
        std::vector<i64> suffix(dim_ + 1, 0);
        for (std::size_t i = dim_; i-- > 0;) suffix[i] = suffix[i + 1] + vec[i] * vec[i];
        placed_suffix_.push_back(std::move(suffix));
    }

    const std::vector<i64>& sigma_;
    const std::vector<i64>& norms_;
    std::size_t dim_;
    std::vector<i64> sigma_suffix_;
    std::vector<std::vector<i64>> placed_;
    std::vector<std::vector<i64>> placed_suffix_;
};

i64 mod_inverse(i64 q, i64 p) {
    i64 t = 0, new_t = 1, r = p, new_r = q % p;
    while (new_r != 0) {
        const i64 quot = r / new_r;
        const i64 t2 = t - quot * new_t;
        t = new_t;
        new_t = t2;
        const i64 r2 = r - quot * new_r;
        r = new_r;
        new_r = r2;
    }
    return ((t % p) + p) % p;
}

}  // namespace

std::optional<std::vector<std::vector<i64>>> embed_linear(const Changemaker& sigma, i64 p,
                                                          i64 q) {
    if (p != sigma.p()) fail(errc::invalid_argument, "p must equal the sum of squares of sigma");
    const HJExpansion e = hj_expansion(p, q);
    if (static_cast<i64>(e.coeffs.size()) != sigma.dim() - 1)
        fail(errc::invalid_argument, "expansion length does not match the complement rank");
    // Rank and determinant agree, so an embedding would be an isometry; a
    // mismatch in short-vector counts rules one out without searching.
    if (!e.coeffs.empty() &&
        short_vector_counts(linear_gram(e), 3) != complement_short_counts(sigma, 3))
        return std::nullopt;
    EmbedSearch search(sigma.entries(), e.coeffs);
    return search.run();
}

std::vector<Realization> realize(const Changemaker& sigma, int threads) {
    const i64 p = sigma.p();
    if (p > 500) fail(errc::capacity, "realization search limited to p <= 500");
    if (p == 1) return {Realization{1, 0, 0, {}}};

    std::vector<std::pair<i64, i64>> q_list;  // canonical (q, q')
    for (i64 q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const i64 dual = mod_inverse(q, p);
        if (q > dual) continue;  // handled at the canonical representative
        q_list.push_back({q, dual});
    }

    auto try_q = [&](std::pair<i64, i64> qq) -> std::optional<Realization> {
        const HJExpansion e = hj_expansion(p, qq.first);
        if (static_cast<i64>(e.coeffs.size()) != sigma.dim() - 1) return std::nullopt;
        auto vertices = embed_linear(sigma, p, qq.first);
        if (!vertices) return std::nullopt;
        return Realization{p, qq.first, qq.second, std::move(*vertices)};
    };

    std::vector<std::optional<Realization>> slots(q_list.size());
    if (threads <= 1 || q_list.size() < 2) {
        for (std::size_t i = 0; i < q_list.size(); ++i) slots[i] = try_q(q_list[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < q_list.size(); i = next++) slots[i] = try_q(q_list[i]);
        };
        const std::size_t count =
            std::min<std::size_t>(static_cast<std::size_t>(threads), q_list.size());
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<Realization> out;
    for (auto& slot : slots)
        if (slot) out.push_back(std::move(*slot));
    std::sort(out.begin(), out.end(),
              [](const Realization& a, const Realization& b) { return a.q < b.q; });
    return out;
}

}  // namespace lensbord

#pragma once

// Shared helpers for dense cochain-style tables: mixed-radix indexing over
// canonical pair slots plus one basis slot, and wedge expansion of a general
// vector against a basis vector. Internal to the library sources.

#include "trilie/core.hpp"

namespace trilie::detail {

inline std::size_t mixed_index(std::size_t pc, std::size_t dim,
                               const std::vector<std::size_t>& pair_ranks, std::size_t z) {
    std::size_t idx = 0;
    for (std::size_t p : pair_ranks) idx = idx * pc + p;
    return idx * dim + z;
}

// acc += s * (u wedge e_y), written in canonical pair coordinates
inline void add_wedge_with_basis(std::size_t dim, const std::vector<Scalar>& u, std::size_t y,
                                 const Scalar& s, std::vector<Scalar>& acc) {
    if (s == 0) return;
    for (std::size_t t = 0; t < dim; ++t) {
        if (u[t] == 0 || t == y) continue;
        if (t < y)
            acc[pair_rank(dim, t, y)] += u[t] * s;
        else
            acc[pair_rank(dim, y, t)] -= u[t] * s;
    }
}

// acc += s * table-value at (pair_ranks, z) where the slot at position `pos`
// runs over the wedge combination instead of a fixed rank; `pair_ranks[pos]`
// is clobbered during the expansion.
inline void eval_one_wedge_slot(const std::vector<std::vector<Scalar>>& table, std::size_t pc,
                                std::size_t dim, std::vector<std::size_t>& pair_ranks,
                                std::size_t pos, const std::vector<Scalar>& wedge, std::size_t z,
                                const Scalar& s, std::vector<Scalar>& acc) {
    if (s == 0) return;
    for (std::size_t pr = 0; pr < pc; ++pr) {
        if (wedge[pr] == 0) continue;
        pair_ranks[pos] = pr;
        axpy(acc, table[mixed_index(pc, dim, pair_ranks, z)], wedge[pr] * s);
    }
}

// sign of the unshuffle determined by the ascending first block S (0-based
// positions): (-1)^{sum_i (S_i - i)}
inline int unshuffle_sign(const std::vector<std::size_t>& S) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < S.size(); ++i) total += S[i] - i;
    return (total % 2 == 0) ? 1 : -1;
}

// enumerate all ascending k-subsets of {0..n-1}, calling f(S, complement)
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> S(k);
    for (std::size_t i = 0; i < k; ++i) S[i] = i;
    std::vector<std::size_t> C;
    while (true) {
        C.clear();
        std::size_t si = 0;
        for (std::size_t t = 0; t < n; ++t) {
            if (si < k && S[si] == t)
                ++si;
            else
                C.push_back(t);
        }
        f(S, C);
        // next combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && S[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++S[i - 1];
        for (std::size_t t = i; t < k; ++t) S[t] = S[t - 1] + 1;
    }
}

}  // namespace trilie::detail

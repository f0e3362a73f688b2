#pragma once

#include <cstdint>

#include "labseq/sequence.hpp"

namespace labseq {

/// Split of the energy into the constant square part X and twice the cross
/// part Y, with the cross terms counted by sign: E = X + 2Y, Y = m - 2n.
struct energy_decomposition {
    std::int64_t x_term = 0;       // N(N-1)/2, the always-positive squares
    std::int64_t pair_count = 0;   // m: number of cross terms
    std::int64_t minus_pairs = 0;  // n: cross terms equal to -1
    std::int64_t plus_pairs = 0;   // p: cross terms equal to +1
    std::int64_t y_term = 0;       // m - 2n
    std::int64_t energy = 0;
};

/// Counts the -1 cross terms level by level: a level of length L with n_k
/// minus elements contributes n_k * (L - n_k) mixed pairs.
inline energy_decomposition decompose_energy(const binary_sequence& seq) {
    const std::size_t n = seq.length();
    if (n < 2) throw error("energy decomposition requires length >= 2");
    energy_decomposition d;
    d.x_term = static_cast<std::int64_t>(n * (n - 1) / 2);
    d.pair_count = pair_count(n);
    for (std::size_t k = 1; k < n; ++k) {
        const std::size_t len = n - k;
        const std::int64_t nk = detail::shifted_mismatches(seq.words(), k, len);
        d.minus_pairs += nk * (static_cast<std::int64_t>(len) - nk);
    }
    d.plus_pairs = d.pair_count - d.minus_pairs;
    d.y_term = d.pair_count - 2 * d.minus_pairs;
    d.energy = d.x_term + 2 * d.y_term;
    return d;
}

}  // namespace labseq

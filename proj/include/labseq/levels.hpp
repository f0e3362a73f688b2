#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "labseq/bounds.hpp"
#include "labseq/sequence.hpp"

namespace labseq {

/// Element-wise products x_i * x_{i+k} at lag k; the level whose pair
/// statistics drive the cross part of the energy.
inline std::vector<int> level_products(const binary_sequence& seq, std::size_t k) {
    const std::size_t n = seq.length();
    if (k < 1 || k >= n)
        throw error("lag " + std::to_string(k) + " out of range for length " + std::to_string(n));
    std::vector<int> products(n - k);
    for (std::size_t i = 0; i < n - k; ++i) products[i] = seq.at(i) * seq.at(i + k);
    return products;
}

/// Mixed pairs within one level: n_k minus elements among L produce
/// n_k * (L - n_k) products equal to -1.
inline std::int64_t pair_minus_count(std::int64_t minus_count, std::int64_t length) {
    if (minus_count < 0 || minus_count > length) throw error("minus count out of range");
    return minus_count * (length - minus_count);
}

/// Best achievable mixed-pair count for a level of length L: floor(L^2 / 4).
inline std::int64_t level_pair_max(std::int64_t length) {
    if (length < 1) throw error("level length must be at least 1");
    return length * length / 4;
}

/// Minus counts that attain the level maximum: L/2 for even L, either of
/// (L-1)/2 and (L+1)/2 for odd L.
inline std::pair<std::int64_t, std::int64_t> expected_minus_range(std::int64_t length) {
    if (length < 1) throw error("level length must be at least 1");
    if (length % 2 == 0) return {length / 2, length / 2};
    return {(length - 1) / 2, (length + 1) / 2};
}

struct level_row {
    std::size_t lag = 0;
    std::int64_t length = 0;
    std::vector<int> products;
    std::int64_t minus_count = 0;          // n_k
    std::int64_t expected_minus_lo = 0;
    std::int64_t expected_minus_hi = 0;
    std::int64_t theoretical_pair_max = 0;  // floor(length^2 / 4)
    std::int64_t actual_pair_minus = 0;     // n_k * (length - n_k)
    std::int64_t deviation = 0;             // theoretical - actual, always >= 0
};

/// One row per lag 1..N-1. The total deviation equals (E - E_min)/4, so a
/// zero total certifies a sequence at the theoretical minimum.
struct level_table {
    std::size_t n_value = 0;
    std::vector<level_row> rows;
    std::int64_t total_deviation = 0;
};

inline level_table build_level_table(const binary_sequence& seq) {
    const std::size_t n = seq.length();
    if (n < 1) throw error("level table requires a non-empty sequence");
    level_table table;  // a single element has no levels; the table is empty
    table.n_value = n;
    table.rows.reserve(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        level_row row;
        row.lag = k;
        row.length = static_cast<std::int64_t>(n - k);
        row.products = level_products(seq, k);
        for (int v : row.products) row.minus_count += v < 0;
        std::tie(row.expected_minus_lo, row.expected_minus_hi) = expected_minus_range(row.length);
        row.theoretical_pair_max = level_pair_max(row.length);
        row.actual_pair_minus = pair_minus_count(row.minus_count, row.length);
        row.deviation = row.theoretical_pair_max - row.actual_pair_minus;
        table.total_deviation += row.deviation;
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace labseq

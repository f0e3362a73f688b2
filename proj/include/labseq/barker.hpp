#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "labseq/bounds.hpp"
#include "labseq/sequence.hpp"

namespace labseq {

/// Deviation from the minimum energy implied by a merit factor, in lattice
/// steps of 4. Distinguishes the even and odd length formulas; a sequence
/// whose off-peak lags all sit at the parity-forced level makes this zero.
inline double barker_deviation(std::uint64_t n, double merit) {
    if (!(merit > 0)) throw error("merit factor must be positive");
    const double nn = static_cast<double>(n);
    if (n % 2 == 0) return (nn * nn - merit * nn) / (8 * merit);
    return (nn * nn - merit * nn + merit) / (8 * merit);
}

struct barker_root_set {
    double merit = 0;
    double even_root = 0;  // even lengths: the zero sits exactly at N = F
    bool has_odd_roots = false;
    double odd_root_high = 0;
    double odd_root_low = 0;
};

/// Lengths at which the deviation for a given merit factor vanishes. The even
/// branch is linear in N; the odd branch is the quadratic
/// N^2 - F*N + F = 0, real only for F >= 4.
inline barker_root_set barker_roots(double merit) {
    if (!(merit > 0)) throw error("merit factor must be positive");
    barker_root_set roots;
    roots.merit = merit;
    roots.even_root = merit;
    const double disc = merit * merit - 4 * merit;
    if (disc >= 0) {
        roots.has_odd_roots = true;
        const double sq = std::sqrt(disc);
        roots.odd_root_high = (merit + sq) / 2;
        roots.odd_root_low = (merit - sq) / 2;
    }
    return roots;
}

struct barker_analysis {
    std::uint64_t n_value = 0;
    std::int64_t energy = 0;
    std::optional<merit_factor> merit;
    bool is_barker = false;  // every off-peak lag in {-1, 0, 1}
    bool attains_e_min = false;
    double deviation_from_merit = 0;
};

inline barker_analysis barker_check(const binary_sequence& seq) {
    const autocorrelation_profile profile = autocorrelate(seq);
    barker_analysis analysis;
    analysis.n_value = profile.n;
    analysis.energy = profile.energy;
    analysis.merit = profile.merit;
    analysis.is_barker = true;
    for (const std::int64_t r : profile.lags)
        if (r < -1 || r > 1) analysis.is_barker = false;
    analysis.attains_e_min = profile.energy == min_energy(profile.n);
    if (analysis.merit) analysis.deviation_from_merit = barker_deviation(profile.n, analysis.merit->value());
    return analysis;
}

}  // namespace labseq

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "labseq/common.hpp"

namespace labseq {

/// Merit factor carried as an exact integer ratio (N^2 over 2E) and rendered
/// to four decimals, so table values compare exactly.
struct merit_factor {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    [[nodiscard]] double value() const {
        return static_cast<double>(numerator) / static_cast<double>(denominator);
    }
    [[nodiscard]] std::string fixed() const { return format_fixed(value(), 4); }

    friend bool operator==(const merit_factor& a, const merit_factor& b) {
        return static_cast<uint128>(a.numerator) * b.denominator ==
               static_cast<uint128>(b.numerator) * a.denominator;
    }
};

/// N^2 / (2E). Undefined for zero energy; that case is reported as an error,
/// not as infinity, so callers stay in total arithmetic.
inline merit_factor merit_of(std::uint64_t n, std::int64_t energy) {
    if (n < 2) throw error("merit factor undefined for length " + std::to_string(n));
    if (energy < 0) throw error("negative energy");
    if (energy == 0) throw error("merit factor undefined: zero energy");
    return {n * n, 2 * static_cast<std::uint64_t>(energy)};
}

/// Highest achievable energy, N(N-1)(2N-1)/6; attained by the all-plus sequence.
inline std::int64_t max_energy(std::uint64_t n) {
    if (n <= 1) return 0;
    return static_cast<std::int64_t>(n * (n - 1) * (2 * n - 1) / 6);
}

/// Theoretical minimum energy level: N/2 for even N, (N-1)/2 for odd N.
inline std::int64_t min_energy(std::uint64_t n) {
    return static_cast<std::int64_t>(n % 2 == 0 ? n / 2 : (n - 1) / 2);
}

/// Merit factor at the theoretical energy minimum: N for even N, N^2/(N-1) for odd.
inline merit_factor max_merit(std::uint64_t n) {
    if (n < 2) throw error("maximum merit factor undefined for length " + std::to_string(n));
    return merit_of(n, min_energy(n));
}

/// Number of cross terms feeding the Y part of the energy: N(N-1)(N-2)/6,
/// equal to the sum of C(N-k, 2) over the autocorrelation levels.
inline std::int64_t pair_count(std::uint64_t n) {
    if (n < 2) throw error("pair count undefined for length " + std::to_string(n));
    return static_cast<std::int64_t>(n * (n - 1) * (n - 2) / 6);
}

/// Largest possible total of minus-valued cross terms, summed over all levels:
/// N(N-2)(2N+1)/24 for even N, (N-1)(N+1)(2N-3)/24 for odd N.
/// Equals the lag-wise sum of floor((N-k)^2 / 4).
inline std::int64_t max_minus_pairs(std::uint64_t n) {
    if (n <= 1) return 0;
    if (n % 2 == 0) return static_cast<std::int64_t>(n * (n - 2) * (2 * n + 1) / 24);
    return static_cast<std::int64_t>((n - 1) * (n + 1) * (2 * n - 3) / 24);
}

/// Distance from the theoretical minimum in lattice steps: (E - E_min)/4.
/// Energies off the mod-4 lattice or below the minimum are not realizable.
inline std::int64_t deviation_of(std::uint64_t n, std::int64_t energy) {
    const std::int64_t lo = min_energy(n);
    if (energy < lo || (energy - lo) % 4 != 0)
        throw error("inconsistent energy " + std::to_string(energy) + " for length " +
                    std::to_string(n) + ": not on the achievable lattice");
    return (energy - lo) / 4;
}

/// The closed-form quantities for one sequence length, bundled for reporting.
struct theoretical_bounds {
    std::uint64_t n_value = 0;
    std::int64_t e_max = 0;
    std::int64_t e_min = 0;
    std::int64_t n_max = 0;  // largest achievable minus-pair total
    std::optional<merit_factor> f_max;
};

inline theoretical_bounds bounds_for(std::uint64_t n) {
    theoretical_bounds b;
    b.n_value = n;
    b.e_max = max_energy(n);
    b.e_min = min_energy(n);
    b.n_max = max_minus_pairs(n);
    if (n >= 2) b.f_max = max_merit(n);
    return b;
}

}  // namespace labseq

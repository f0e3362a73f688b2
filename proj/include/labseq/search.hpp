#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "labseq/bounds.hpp"
#include "labseq/sequence.hpp"
#include "labseq/symmetry.hpp"

namespace labseq {

enum class search_mode { exhaustive, heuristic };

struct search_options {
    search_mode mode = search_mode::exhaustive;
    /// Enumerate only canonical orbit representatives (lossless).
    bool use_symmetry = true;
    /// Minus-count bound; the filter is off unless set. At the default bound
    /// ceil(N/2), pairing with negation keeps the search lossless; tighter
    /// bounds restrict the space and may miss optima.
    std::optional<unsigned> max_minus_count;
    std::uint64_t seed = 0;
    std::uint64_t restarts = 1;
    unsigned worker_count = 1;
    unsigned exhaustive_ceiling = 28;
    /// Periodic (examined, best-so-far) callback; line-rate, not synchronized
    /// with the final result.
    std::function<void(std::uint64_t, std::int64_t)> progress;
};

inline unsigned default_max_minus(std::uint64_t n) {
    return static_cast<unsigned>((n + 1) / 2);  // ceil(N/2) == round(N/2) for integers
}

struct search_result {
    std::uint64_t n_value = 0;
    search_mode mode = search_mode::exhaustive;
    std::int64_t best_energy = 0;
    std::optional<merit_factor> best_merit;
    /// Exhaustive mode: exact count of optimal sequences in the full 2^N
    /// space (reconstructed from representatives when pruning is on).
    /// Heuristic mode: distinct optima actually visited.
    std::uint64_t optimum_count = 0;
    binary_sequence canonical_best;
    bool attained_e_min = false;
    std::int64_t deviation = 0;
    std::uint64_t sequences_examined = 0;
    std::chrono::duration<double> elapsed{0};
};

struct search_space_stats {
    std::uint64_t n_value = 0;
    unsigned max_minus = 0;
    uint128 full_size = 0;      // 2^N
    uint128 filtered_size = 0;  // sum of C(N,k), k = 1..max_minus
    double reduction_ratio = 0;
};

/// Exact size of the minus-count-filtered space. Binomials are built
/// additively, so everything stays in exact integer arithmetic.
inline search_space_stats count_search_space(std::uint64_t n,
                                             std::optional<unsigned> max_minus = {}) {
    if (n < 1) throw error("length must be at least 1");
    if (n > 127) throw error("search-space accounting supports lengths up to 127");
    search_space_stats stats;
    stats.n_value = n;
    stats.max_minus = max_minus ? *max_minus : default_max_minus(n);
    if (stats.max_minus > n) stats.max_minus = static_cast<unsigned>(n);

    std::vector<uint128> row(n + 1, 0);
    row[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t k = i; k >= 1; --k) row[k] += row[k - 1];
    for (unsigned k = 1; k <= stats.max_minus; ++k) stats.filtered_size += row[k];

    stats.full_size = uint128{1} << n;
    stats.reduction_ratio = static_cast<double>(
        1.0L - static_cast<long double>(stats.filtered_size) /
                   static_cast<long double>(stats.full_size));
    return stats;
}

namespace detail {

inline std::int64_t energy_bits(std::uint64_t bits, unsigned n) {
    std::int64_t e = 0;
    for (unsigned k = 1; k < n; ++k) {
        const unsigned len = n - k;
        const int mismatches = std::popcount((bits ^ (bits >> k)) & low_mask(len));
        const std::int64_t r = static_cast<std::int64_t>(len) - 2 * mismatches;
        e += r * r;
    }
    return e;
}

/// Smallest minus count over the whole orbit; used to decide whether a
/// representative survives the minus-count filter.
inline unsigned orbit_min_minus(std::uint64_t bits, unsigned n) {
    unsigned best = n;
    for (std::uint64_t img : orbit_images(bits, n))
        best = std::min(best, static_cast<unsigned>(std::popcount(img)));
    return best;
}

struct scan_partial {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::uint64_t count = 0;
    std::uint64_t canonical = 0;
    bool has_best = false;
    std::uint64_t examined = 0;
};

inline void merge_into(scan_partial& acc, const scan_partial& part) {
    acc.examined += part.examined;
    if (!part.has_best) return;
    if (!acc.has_best || part.best < acc.best) {
        acc.best = part.best;
        acc.count = part.count;
        acc.canonical = part.canonical;
        acc.has_best = true;
    } else if (part.best == acc.best) {
        acc.count += part.count;
        if (lex_less_bits(part.canonical, acc.canonical)) acc.canonical = part.canonical;
    }
}

}  // namespace detail

/// Exact global minimization over all 2^N sequences. Enumeration is an
/// odometer over bit encodings; symmetry pruning visits only canonical orbit
/// representatives and reconstructs full-space counts from orbit sizes.
/// Work units are the fixed-length encoding prefixes, so the merged result is
/// identical for any worker count.
inline search_result exhaustive_search(std::uint64_t n, const search_options& opts = {}) {
    if (n < 1) throw error("length must be at least 1");
    const unsigned ceiling = std::min<unsigned>(opts.exhaustive_ceiling, 63);
    if (n > ceiling)
        throw error("length " + std::to_string(n) + " exceeds the exhaustive ceiling " +
                    std::to_string(ceiling) +
                    "; raise the ceiling or use heuristic mode for long sequences");
    const auto t0 = std::chrono::steady_clock::now();
    const unsigned bits_n = static_cast<unsigned>(n);

    std::optional<unsigned> filter = opts.max_minus_count;
    if (filter && *filter > n) filter = static_cast<unsigned>(n);

    const unsigned prefix = bits_n > 16 ? std::min(8u, bits_n - 16) : 0u;
    const std::uint64_t units = std::uint64_t{1} << prefix;
    const std::uint64_t unit_span = std::uint64_t{1} << (bits_n - prefix);

    std::vector<detail::scan_partial> partials(units);
    std::atomic<std::uint64_t> next_unit{0};
    std::atomic<std::uint64_t> global_examined{0};
    std::atomic<std::int64_t> global_best{std::numeric_limits<std::int64_t>::max()};
    std::mutex progress_mutex;

    auto scan_unit = [&](std::uint64_t unit) {
        detail::scan_partial part;
        const std::uint64_t begin = unit * unit_span, end = begin + unit_span;
        for (std::uint64_t e = begin; e < end; ++e) {
            if (opts.use_symmetry) {
                if (!detail::is_canonical_bits(e, bits_n)) continue;
                if (filter && detail::orbit_min_minus(e, bits_n) > *filter) continue;
            } else if (filter && static_cast<unsigned>(std::popcount(e)) > *filter) {
                continue;
            }
            const std::int64_t energy = detail::energy_bits(e, bits_n);
            ++part.examined;
            if (energy > part.best) continue;
            if (energy < part.best) {
                part.best = energy;
                part.count = 0;
                part.has_best = true;
                part.canonical = detail::canonical_bits(e, bits_n);
            }
            if (opts.use_symmetry) {
                part.count += detail::orbit_size_bits(e, bits_n);
            } else if (filter) {
                // The negation partner above the bound is optimal too but
                // was never enumerated.
                part.count += 1 + (n - std::popcount(e) > *filter ? 1 : 0);
            } else {
                part.count += 1;
            }
            const std::uint64_t canon = detail::canonical_bits(e, bits_n);
            if (detail::lex_less_bits(canon, part.canonical)) part.canonical = canon;
        }
        partials[unit] = part;

        if (opts.progress) {
            const auto examined =
                global_examined.fetch_add(part.examined, std::memory_order_relaxed) +
                part.examined;
            std::int64_t seen = global_best.load(std::memory_order_relaxed);
            while (part.has_best && part.best < seen &&
                   !global_best.compare_exchange_weak(seen, part.best)) {
            }
            std::lock_guard<std::mutex> lock(progress_mutex);
            opts.progress(examined, std::min(seen, part.best));
        }
    };

    const unsigned workers =
        std::max(1u, std::min<unsigned>(opts.worker_count, static_cast<unsigned>(units)));
    if (workers == 1) {
        for (std::uint64_t u = 0; u < units; ++u) scan_unit(u);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t u = next_unit.fetch_add(1); u < units;
                     u = next_unit.fetch_add(1))
                    scan_unit(u);
            });
        for (auto& t : pool) t.join();
    }

    detail::scan_partial merged;
    for (const auto& part : partials) detail::merge_into(merged, part);

    search_result result;
    result.n_value = n;
    result.mode = search_mode::exhaustive;
    result.best_energy = merged.best;
    if (merged.best > 0) result.best_merit = merit_of(n, merged.best);
    result.optimum_count = merged.count;
    result.canonical_best = binary_sequence::from_bits(merged.canonical, n);
    result.attained_e_min = merged.best == min_energy(n);
    result.deviation = deviation_of(n, merged.best);
    result.sequences_examined = merged.examined;
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

/// Change in energy from flipping the element at `pos` (0-based), computed
/// from the current profile in O(N): each lag term touching `pos` flips sign,
/// so R_k drops by twice their sum t_k and the energy moves by
/// 4*t_k^2 - 4*R_k*t_k.
inline std::int64_t flip_energy_delta(const binary_sequence& seq,
                                      const autocorrelation_profile& profile, std::size_t pos) {
    const std::size_t n = seq.length();
    if (pos >= n)
        throw error("flip position " + std::to_string(pos) + " out of range for length " +
                    std::to_string(n));
    if (profile.n != n) throw error("profile length does not match sequence");
    std::int64_t delta = 0;
    const int xi = seq.at(pos);
    for (std::size_t k = 1; k < n; ++k) {
        std::int64_t t = 0;
        if (pos >= k) t += seq.at(pos - k) * xi;
        if (pos + k < n) t += xi * seq.at(pos + k);
        if (t != 0) delta += 4 * t * t - 4 * profile.lags[k - 1] * t;
    }
    return delta;
}

namespace detail {

struct descent_state {
    std::vector<int> x;
    std::vector<std::int64_t> lags;
    std::int64_t energy = 0;

    void init(const binary_sequence& seq) {
        x = seq.elements();
        auto profile = autocorrelate(seq);
        lags = std::move(profile.lags);
        energy = profile.energy;
    }

    [[nodiscard]] std::int64_t lag_sum_at(std::size_t pos, std::size_t k) const {
        std::int64_t t = 0;
        if (pos >= k) t += x[pos - k] * x[pos];
        if (pos + k < x.size()) t += x[pos] * x[pos + k];
        return t;
    }

    [[nodiscard]] std::int64_t flip_delta(std::size_t pos) const {
        std::int64_t delta = 0;
        for (std::size_t k = 1; k < x.size(); ++k) {
            const std::int64_t t = lag_sum_at(pos, k);
            if (t != 0) delta += 4 * t * t - 4 * lags[k - 1] * t;
        }
        return delta;
    }

    void apply_flip(std::size_t pos, std::int64_t delta) {
        for (std::size_t k = 1; k < x.size(); ++k) lags[k - 1] -= 2 * lag_sum_at(pos, k);
        x[pos] = -x[pos];
        energy += delta;
    }

    [[nodiscard]] binary_sequence sequence() const { return binary_sequence::from_elements(x); }
};

inline binary_sequence draw_sequence(std::mt19937_64& rng, std::size_t n) {
    binary_sequence seq(n);
    for (std::size_t i = 0; i < n; i += 64) {
        const std::uint64_t word = rng();
        for (std::size_t j = i; j < std::min(n, i + 64); ++j)
            if ((word >> (j - i)) & 1) seq.flip(j);
    }
    return seq;
}

struct descent_partial {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::set<std::vector<std::uint64_t>> best_encodings;
    std::uint64_t examined = 0;
};

}  // namespace detail

/// Steepest-descent single-flip local search with uniform random restarts.
/// Ties break toward the lowest flip position. Deterministic for a fixed
/// (seed, restarts) at worker_count 1: restart r draws the r-th start from a
/// std::mt19937_64 seeded with `seed` (worker w seeds with seed + w).
/// Stops early once the theoretical minimum energy is reached.
inline search_result heuristic_search(std::uint64_t n, const search_options& opts) {
    if (n < 1) throw error("length must be at least 1");
    if (opts.restarts < 1) throw error("heuristic mode requires at least one restart");
    const auto t0 = std::chrono::steady_clock::now();
    const std::int64_t floor_energy = min_energy(n);

    const unsigned workers = std::max(1u, opts.worker_count);
    std::vector<detail::descent_partial> partials(workers);
    std::atomic<std::uint64_t> global_examined{0};
    std::mutex progress_mutex;

    // Each worker early-exits only on its own attainment of the floor, so a
    // fixed (seed, restarts, workers) triple always produces the same result.
    auto run_block = [&](unsigned w, std::uint64_t first, std::uint64_t count) {
        std::mt19937_64 rng(opts.seed + w);
        detail::descent_partial& part = partials[w];
        detail::descent_state state;
        for (std::uint64_t r = 0; r < count && part.best != floor_energy; ++r) {
            state.init(detail::draw_sequence(rng, n));
            ++part.examined;
            for (;;) {
                std::int64_t best_delta = 0;
                std::size_t best_pos = n;
                for (std::size_t i = 0; i < n; ++i) {
                    const std::int64_t delta = state.flip_delta(i);
                    if (delta < best_delta) {
                        best_delta = delta;
                        best_pos = i;
                    }
                }
                if (best_pos == n) break;
                state.apply_flip(best_pos, best_delta);
                ++part.examined;
            }
            if (state.energy < part.best) {
                part.best = state.energy;
                part.best_encodings.clear();
            }
            if (state.energy == part.best) part.best_encodings.insert(state.sequence().words());
            if (opts.progress && (r + 1) % 64 == 0) {
                const auto examined = global_examined.fetch_add(64) + 64;
                std::lock_guard<std::mutex> lock(progress_mutex);
                opts.progress(examined, part.best);
            }
        }
        (void)first;
    };

    if (workers == 1) {
        run_block(0, 0, opts.restarts);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = opts.restarts * w / workers;
            const std::uint64_t last = opts.restarts * (w + 1) / workers;
            pool.emplace_back([&, w, first, last] { run_block(w, first, last - first); });
        }
        for (auto& t : pool) t.join();
    }

    detail::descent_partial merged;
    for (auto& part : partials) {
        merged.examined += part.examined;
        if (part.best < merged.best) {
            merged.best = part.best;
            merged.best_encodings = std::move(part.best_encodings);
        } else if (part.best == merged.best) {
            merged.best_encodings.insert(part.best_encodings.begin(), part.best_encodings.end());
        }
    }

    search_result result;
    result.n_value = n;
    result.mode = search_mode::heuristic;
    result.best_energy = merged.best;
    if (merged.best > 0) result.best_merit = merit_of(n, merged.best);
    result.optimum_count = merged.best_encodings.size();
    bool first_member = true;
    for (const auto& words : merged.best_encodings) {
        binary_sequence member(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((words[i / 64] >> (i % 64)) & 1) member.flip(i);
        const binary_sequence canon = canonical_form(member);
        if (first_member || lex_less(canon, result.canonical_best)) result.canonical_best = canon;
        first_member = false;
    }
    result.attained_e_min = merged.best == floor_energy;
    result.deviation = deviation_of(n, merged.best);
    result.sequences_examined = merged.examined;
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

inline search_result run_search(std::uint64_t n, const search_options& opts) {
    return opts.mode == search_mode::exhaustive ? exhaustive_search(n, opts)
                                                : heuristic_search(n, opts);
}

struct lattice_check {
    std::uint64_t n_value = 0;
    std::int64_t e_max = 0;
    std::int64_t e_min = 0;
    std::int64_t min_achieved = 0;
    std::int64_t max_achieved = 0;
    std::uint64_t distinct_energies = 0;
    bool lattice_ok = false;  // every energy on the mod-4 ladder within [e_min, e_max]
    bool attains_e_min = false;
};

/// Full enumeration of all 2^N energies; confirms they live on the mod-4
/// ladder hanging from e_max, never undercut e_min, and top out exactly at
/// e_max.
inline lattice_check verify_lattice(std::uint64_t n) {
    if (n < 1) throw error("length must be at least 1");
    if (n > 24)
        throw error("lattice verification enumerates the full space; length must be at most 24");
    const unsigned bits_n = static_cast<unsigned>(n);
    lattice_check check;
    check.n_value = n;
    check.e_max = max_energy(n);
    check.e_min = min_energy(n);

    std::set<std::int64_t> energies;
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << bits_n); ++e)
        energies.insert(detail::energy_bits(e, bits_n));

    check.min_achieved = *energies.begin();
    check.max_achieved = *energies.rbegin();
    check.distinct_energies = energies.size();
    check.lattice_ok = check.max_achieved == check.e_max && check.min_achieved >= check.e_min;
    for (const std::int64_t energy : energies)
        if ((check.e_max - energy) % 4 != 0) check.lattice_ok = false;
    check.attains_e_min = check.min_achieved == check.e_min;
    return check;
}

}  // namespace labseq

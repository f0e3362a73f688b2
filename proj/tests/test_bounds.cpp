#include <catch2/catch_amalgamated.hpp>

#include "labseq/bounds.hpp"
#include "oracle.hpp"

TEST_CASE("max energy equals the explicit lag-square sum") {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::int64_t sum = 0;
        for (std::uint64_t k = 1; k < n; ++k)
            sum += static_cast<std::int64_t>((n - k) * (n - k));
        REQUIRE(labseq::max_energy(n) == sum);
    }
}

TEST_CASE("minus-pair ceiling equals the lag-wise floor sum") {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::int64_t sum = 0;
        for (std::uint64_t k = 1; k < n; ++k)
            sum += static_cast<std::int64_t>((n - k) * (n - k) / 4);
        REQUIRE(labseq::max_minus_pairs(n) == sum);
    }
}

TEST_CASE("minimum energy hangs off the top of the ladder") {
    for (std::uint64_t n = 1; n <= 200; ++n)
        REQUIRE(labseq::min_energy(n) == labseq::max_energy(n) - 4 * labseq::max_minus_pairs(n));
    REQUIRE(labseq::min_energy(10) == 5);
    REQUIRE(labseq::min_energy(13) == 6);
    REQUIRE(labseq::min_energy(60) == 30);
}

TEST_CASE("cross-term count equals the per-level binomial sum") {
    for (std::uint64_t n = 2; n <= 50; ++n) {
        unsigned long long sum = 0;
        for (std::uint64_t k = 1; k < n; ++k)
            sum += oracle::binomial(static_cast<unsigned>(n - k), 2);
        REQUIRE(static_cast<unsigned long long>(labseq::pair_count(n)) == sum);
    }
}

TEST_CASE("merit factor is an exact ratio rendered to four decimals") {
    const labseq::merit_factor f13 = labseq::merit_of(13, 6);
    REQUIRE(f13 == labseq::merit_factor{169, 12});
    REQUIRE(f13.fixed() == "14.0833");
    REQUIRE(labseq::merit_of(4, 2).value() == 4.0);
    REQUIRE(labseq::merit_of(10, 13).fixed() == "3.8462");
    REQUIRE_THROWS_AS(labseq::merit_of(5, 0), labseq::error);
    REQUIRE_THROWS_AS(labseq::merit_of(1, 3), labseq::error);
}

TEST_CASE("maximum merit follows the parity split") {
    REQUIRE(labseq::max_merit(10) == labseq::merit_factor{100, 10});  // even: F = N
    REQUIRE(labseq::max_merit(13) == labseq::merit_factor{169, 12});  // odd: N^2/(N-1)
    REQUIRE(labseq::max_merit(60).value() == 60.0);
}

TEST_CASE("deviation rejects unreachable energies") {
    REQUIRE(labseq::deviation_of(10, 13) == 2);
    REQUIRE(labseq::deviation_of(13, 6) == 0);
    REQUIRE(labseq::deviation_of(60, 218) == 47);
    REQUIRE_THROWS_AS(labseq::deviation_of(10, 4), labseq::error);   // below the minimum
    REQUIRE_THROWS_AS(labseq::deviation_of(10, 12), labseq::error);  // off the lattice
}

TEST_CASE("bounds bundle") {
    const labseq::theoretical_bounds b = labseq::bounds_for(10);
    REQUIRE(b.e_max == 285);
    REQUIRE(b.e_min == 5);
    REQUIRE(b.n_max == 70);
    REQUIRE(b.f_max.has_value());
    REQUIRE(b.f_max->value() == 10.0);
    REQUIRE_FALSE(labseq::bounds_for(1).f_max.has_value());
}

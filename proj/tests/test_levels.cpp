#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "labseq/decomposition.hpp"
#include "labseq/levels.hpp"
#include "labseq/sequence.hpp"

using labseq::binary_sequence;

TEST_CASE("level products of the length-13 optimum at lag 5") {
    const binary_sequence x13 = labseq::parse_sequence("+++++--++-+-+");
    REQUIRE(labseq::level_products(x13, 5) == std::vector<int>{-1, -1, 1, 1, -1, -1, 1, 1});
    REQUIRE_THROWS_AS(labseq::level_products(x13, 0), labseq::error);
    REQUIRE_THROWS_AS(labseq::level_products(x13, 13), labseq::error);
}

TEST_CASE("per-level pair arithmetic") {
    REQUIRE(labseq::pair_minus_count(3, 8) == 15);
    REQUIRE(labseq::pair_minus_count(0, 5) == 0);
    REQUIRE(labseq::level_pair_max(8) == 16);
    REQUIRE(labseq::level_pair_max(7) == 12);
    REQUIRE(labseq::expected_minus_range(8) == std::pair<std::int64_t, std::int64_t>{4, 4});
    REQUIRE(labseq::expected_minus_range(7) == std::pair<std::int64_t, std::int64_t>{3, 4});
    REQUIRE_THROWS_AS(labseq::pair_minus_count(9, 8), labseq::error);
    REQUIRE_THROWS_AS(labseq::level_pair_max(0), labseq::error);
}

TEST_CASE("level table of the length-13 optimum is deviation-free") {
    const auto table = labseq::build_level_table(labseq::parse_sequence("+++++--++-+-+"));
    REQUIRE(table.rows.size() == 12);
    REQUIRE(table.total_deviation == 0);
    for (const auto& row : table.rows) {
        REQUIRE(row.deviation == 0);
        REQUIRE(row.minus_count >= row.expected_minus_lo);
        REQUIRE(row.minus_count <= row.expected_minus_hi);
    }
}

TEST_CASE("level table of the length-10 optimum") {
    const auto table = labseq::build_level_table(labseq::parse_sequence("+++++--+-+"));
    const std::vector<std::int64_t> deviations = {0, 1, 0, 1, 0, 0, 0, 0, 0};
    REQUIRE(table.rows.size() == deviations.size());
    for (std::size_t i = 0; i < deviations.size(); ++i)
        REQUIRE(table.rows[i].deviation == deviations[i]);
    REQUIRE(table.total_deviation == 2);
}

TEST_CASE("level table of the length-4 optimum") {
    const auto table = labseq::build_level_table(labseq::parse_sequence("+++-"));
    REQUIRE(table.total_deviation == 0);
    for (const auto& row : table.rows) REQUIRE(row.deviation == 0);
}

TEST_CASE("total deviation ties the table to the energy ladder") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(rng() % 30);
        binary_sequence seq(n);
        for (unsigned i = 0; i < n; ++i)
            if (rng() & 1) seq.flip(i);
        const auto table = labseq::build_level_table(seq);
        const auto profile = labseq::autocorrelate(seq);
        const auto decomposition = labseq::decompose_energy(seq);

        REQUIRE(4 * table.total_deviation == profile.energy - labseq::min_energy(n));

        std::int64_t pair_minus_total = 0;
        for (const auto& row : table.rows) pair_minus_total += row.actual_pair_minus;
        REQUIRE(pair_minus_total == decomposition.minus_pairs);
    }
}

TEST_CASE("single element yields an empty table") {
    const auto table = labseq::build_level_table(labseq::parse_sequence("+"));
    REQUIRE(table.rows.empty());
    REQUIRE(table.total_deviation == 0);
}

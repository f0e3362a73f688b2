#include <catch2/catch_amalgamated.hpp>

#include "labseq/bounds.hpp"
#include "labseq/decomposition.hpp"
#include "labseq/sequence.hpp"
#include "oracle.hpp"

using labseq::binary_sequence;

TEST_CASE("decomposition of worked examples") {
    const auto d4 = labseq::decompose_energy(labseq::parse_sequence("+++-"));
    REQUIRE(d4.x_term == 6);
    REQUIRE(d4.pair_count == 4);
    REQUIRE(d4.minus_pairs == 3);
    REQUIRE(d4.plus_pairs == 1);
    REQUIRE(d4.y_term == -2);
    REQUIRE(d4.energy == 2);

    const auto d5 = labseq::decompose_energy(labseq::parse_sequence("+++++"));
    REQUIRE(d5.x_term == 10);
    REQUIRE(d5.pair_count == 10);
    REQUIRE(d5.minus_pairs == 0);
    REQUIRE(d5.y_term == 10);
    REQUIRE(d5.energy == 30);

    const auto d10 = labseq::decompose_energy(labseq::parse_sequence("+++++--+-+"));
    REQUIRE(d10.x_term == 45);
    REQUIRE(d10.pair_count == 120);
    REQUIRE(d10.minus_pairs == 68);
    REQUIRE(d10.plus_pairs == 52);
    REQUIRE(d10.y_term == -16);
    REQUIRE(d10.energy == 13);
}

TEST_CASE("decomposition identities over a full enumeration") {
    for (unsigned n = 2; n <= 10; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const binary_sequence seq = binary_sequence::from_bits(bits, n);
            const auto d = labseq::decompose_energy(seq);
            const long long reference = oracle::energy(oracle::elements_from_bits(bits, n));
            REQUIRE(d.energy == reference);
            REQUIRE(d.energy == d.x_term + 2 * d.y_term);
            REQUIRE(d.y_term == d.pair_count - 2 * d.minus_pairs);
            REQUIRE(d.minus_pairs + d.plus_pairs == d.pair_count);
            REQUIRE(d.energy == labseq::max_energy(n) - 4 * d.minus_pairs);
            REQUIRE(d.pair_count == labseq::pair_count(n));
            REQUIRE(d.minus_pairs <= labseq::max_minus_pairs(n));
        }
    }
}

TEST_CASE("decomposition rejects single elements") {
    REQUIRE_THROWS_AS(labseq::decompose_energy(labseq::parse_sequence("+")), labseq::error);
}

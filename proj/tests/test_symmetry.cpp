#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "labseq/sequence.hpp"
#include "labseq/symmetry.hpp"
#include "oracle.hpp"

using labseq::binary_sequence;

TEST_CASE("elementary transforms") {
    const binary_sequence seq = labseq::parse_sequence("+++-");
    REQUIRE(labseq::negated(seq).to_string() == "---+");
    REQUIRE(labseq::reversed(seq).to_string() == "-+++");
    REQUIRE(labseq::alternated(seq).to_string() == "-+--");  // flips positions 0 and 2
    REQUIRE(labseq::negated(labseq::negated(seq)) == seq);
    REQUIRE(labseq::reversed(labseq::reversed(seq)) == seq);
    REQUIRE(labseq::alternated(labseq::alternated(seq)) == seq);
}

TEST_CASE("transforms preserve energy") {
    std::mt19937_64 rng(31);
    for (unsigned n : {2u, 3u, 9u, 16u, 33u, 70u}) {
        for (int trial = 0; trial < 4; ++trial) {
            binary_sequence seq(n);
            for (unsigned i = 0; i < n; ++i)
                if (rng() & 1) seq.flip(i);
            const std::int64_t e = labseq::autocorrelate(seq).energy;
            REQUIRE(labseq::autocorrelate(labseq::negated(seq)).energy == e);
            REQUIRE(labseq::autocorrelate(labseq::reversed(seq)).energy == e);
            REQUIRE(labseq::autocorrelate(labseq::alternated(seq)).energy == e);
        }
    }
}

TEST_CASE("orbit structure of known sequences") {
    const auto orbit4 = labseq::orbit_of(labseq::parse_sequence("+++-"));
    REQUIRE(orbit4.members.size() == 8);
    REQUIRE(orbit4.canonical.to_string() == "+++-");

    const auto orbit2 = labseq::orbit_of(labseq::parse_sequence("++"));
    REQUIRE(orbit2.members.size() == 4);
    REQUIRE(orbit2.canonical.to_string() == "++");

    // The length-13 optimum maps onto itself under half the group.
    const auto orbit13 = labseq::orbit_of(labseq::parse_sequence("+++++--++-+-+"));
    REQUIRE(orbit13.members.size() == 4);
    REQUIRE(orbit13.canonical.to_string() == "+++++--++-+-+");
}

TEST_CASE("orbit invariants on random sequences") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(rng() % 20);
        binary_sequence seq(n);
        for (unsigned i = 0; i < n; ++i)
            if (rng() & 1) seq.flip(i);
        const auto orbit = labseq::orbit_of(seq);

        const auto size = orbit.members.size();
        REQUIRE((size == 1 || size == 2 || size == 4 || size == 8));
        for (std::size_t i = 1; i < size; ++i)
            REQUIRE(lex_less(orbit.members[i - 1], orbit.members[i]));
        REQUIRE(orbit.canonical == orbit.members.front());
        REQUIRE(labseq::canonical_form(seq) == orbit.canonical);
        REQUIRE(labseq::canonical_form(orbit.canonical) == orbit.canonical);

        bool contains_self = false;
        for (const auto& member : orbit.members) contains_self |= member == seq;
        REQUIRE(contains_self);
    }
}

TEST_CASE("single-word fast path agrees with the general transforms") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 24);
        const std::uint64_t bits = rng() & labseq::detail::low_mask(n);
        const binary_sequence seq = binary_sequence::from_bits(bits, n);

        REQUIRE(labseq::detail::canonical_bits(bits, n) == labseq::canonical_form(seq).low_word());
        REQUIRE(labseq::detail::is_canonical_bits(bits, n) ==
                (labseq::canonical_form(seq) == seq));
        REQUIRE(labseq::detail::orbit_size_bits(bits, n) == labseq::orbit_of(seq).members.size());
        REQUIRE(labseq::detail::reverse_low_bits(bits, n) ==
                labseq::reversed(seq).low_word());
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "labseq/records.hpp"

TEST_CASE("builtin record table shape") {
    const auto& records = labseq::builtin_records();
    REQUIRE(records.size() == 57);
    REQUIRE(records.front().n_value == 4);
    REQUIRE(records.front().best_energy == 2);
    REQUIRE(records.back().n_value == 60);
    REQUIRE(records.back().best_energy == 218);
}

TEST_CASE("builtin records sit on the energy ladder") {
    const auto rows = labseq::analyze_records(labseq::builtin_records());
    for (const auto& row : rows) {
        REQUIRE(row.best_energy == row.min_possible + 4 * row.deviation);
        REQUIRE(row.deviation >= 0);
    }
}

TEST_CASE("zero deviation occurs exactly at the five known lengths") {
    for (const auto& row : labseq::analyze_records(labseq::builtin_records())) {
        const bool expected = row.n_value == 4 || row.n_value == 5 || row.n_value == 7 ||
                              row.n_value == 11 || row.n_value == 13;
        CAPTURE(row.n_value);
        REQUIRE((row.deviation == 0) == expected);
    }
}

TEST_CASE("record CSV loading accepts headers, blanks and whitespace") {
    std::istringstream in("n,best_energy\n4,2\n\n 5 , 2 \n13,6\n");
    const auto rows = labseq::load_records(in);
    REQUIRE(rows.size() == 3);
    REQUIRE(rows[1].n_value == 5);
    REQUIRE(rows[2].best_energy == 6);

    std::istringstream headerless("4,2\n5,2\n");
    REQUIRE(labseq::load_records(headerless).size() == 2);
}

TEST_CASE("record CSV loading rejects bad rows with their row number") {
    auto expect_reject = [](const char* text, const char* fragment) {
        std::istringstream in(text);
        try {
            labseq::load_records(in);
            FAIL("expected rejection for: " << text);
        } catch (const labseq::error& e) {
            REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring(fragment));
        }
    };
    expect_reject("n,best_energy\n4,2\nfive,2\n", "row 3");
    expect_reject("4,2,9\n", "row 1");
    expect_reject("4\n", "row 1");
    expect_reject("4,-2\n", "row 1");
    expect_reject("1,0\n", "length");
    expect_reject("n,best_energy\n10,4\n", "row 2");   // below the minimum
    expect_reject("n,best_energy\n10,12\n", "row 2");  // off the lattice
}

TEST_CASE("deviation fit input comes straight from the analyzed rows") {
    const auto rows = labseq::analyze_records(labseq::builtin_records());
    const auto model = labseq::fit_record_deviations(rows);
    REQUIRE(model.fit_lo == 4.0);
    REQUIRE(model.fit_hi == 60.0);
    REQUIRE(model.a2 > 0);
}
